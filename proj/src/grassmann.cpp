#include "pospoly/grassmann.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "pospoly/errors.hpp"

namespace pospoly {

std::string root_label(int i, int j) {
    return "a_" + std::to_string(i) + "_" + std::to_string(j);
}

RootPoset root_poset(int d, int n) {
    if (d < 1 || d >= n) fail(Errc::BadParams, "root poset needs 1 <= d < n");
    RootPoset rp;
    rp.d = d;
    rp.n = n;
    std::vector<std::string> labels(static_cast<std::size_t>(d) * (n - d));
    for (int i = 1; i <= d; ++i)
        for (int j = d; j <= n - 1; ++j) labels[rp.index(i, j)] = root_label(i, j);
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 1; i <= d; ++i)
        for (int j = d; j <= n - 1; ++j) {
            if (i + 1 <= d) covers.emplace_back(root_label(i, j), root_label(i + 1, j));
            if (j + 1 <= n - 1) covers.emplace_back(root_label(i, j), root_label(i, j + 1));
        }
    rp.poset = Poset::build(std::move(labels), covers);
    return rp;
}

std::vector<Chain> dyck_paths(const RootPoset& rp) { return rp.poset.maximal_chains(); }

std::vector<IntPoint> fflv_points(int d, int n, long long m) {
    if (m < 0) fail(Errc::BadParams, "m must be nonnegative");
    return enumerate_points(root_poset(d, n).poset, Params{m, 0});
}

BigInt weyl_dim(int d, int n, long long m) {
    if (d < 1 || d >= n) fail(Errc::BadParams, "weyl_dim needs 1 <= d < n");
    if (m < 0) fail(Errc::BadParams, "m must be nonnegative");
    Rational dim = 1;
    for (int i = 1; i <= d; ++i)
        for (int j = d + 1; j <= n; ++j)
            dim *= Rational(m + j - i, j - i);
    if (boost::multiprecision::denominator(dim) != 1)
        fail(Errc::NonIntegerResult, "dimension product is not an integer (bug)");
    return boost::multiprecision::numerator(dim);
}

std::vector<Inequality> inequality_system(int d, int n, long long m, long long M, int r_max,
                                          std::size_t cap) {
    if (m < 0 || M < 0) fail(Errc::BadParams, "m and M must be nonnegative");
    const RootPoset rp = root_poset(d, n);
    if (r_max < 1) fail(Errc::BadParams, "r_max must be at least 1");
    r_max = std::min(r_max, std::min(d, n - d));  // larger unions add nothing
    const auto paths = dyck_paths(rp);
    const int p = static_cast<int>(paths.size());

    // Number of path subsets of size <= r_max, checked before enumerating.
    std::size_t count = 0;
    for (int r = 1; r <= r_max; ++r) {
        std::size_t c = 1;
        for (int t = 0; t < r; ++t) c = c * (p - t) / (t + 1);
        count += c;
        if (count > cap) fail(Errc::TooLarge, "too many Dyck-path subsets");
    }

    std::map<std::vector<int>, long long> best;
    std::vector<int> pick;
    auto emit = [&](int r) {
        std::vector<char> in(rp.num_roots(), 0);
        for (int t : pick)
            for (int e : paths[t]) in[e] = 1;
        std::vector<int> support;
        for (int e = 0; e < rp.num_roots(); ++e)
            if (in[e]) support.push_back(e);
        const long long bound = static_cast<long long>(r) * m + M;
        auto it = best.find(support);
        if (it == best.end())
            best.emplace(std::move(support), bound);
        else
            it->second = std::min(it->second, bound);
    };
    std::function<void(int, int)> choose = [&](int from, int left) {
        if (left == 0) {
            emit(static_cast<int>(pick.size()));
            return;
        }
        for (int t = from; t + left <= p; ++t) {
            pick.push_back(t);
            choose(t + 1, left - 1);
            pick.pop_back();
        }
    };
    for (int r = 1; r <= r_max; ++r) choose(0, r);

    std::vector<Inequality> out;
    out.reserve(best.size());
    for (auto& [support, bound] : best) out.push_back({support, bound});
    return out;
}

}  // namespace pospoly
