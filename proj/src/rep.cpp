#include "pospoly/rep.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "pospoly/errors.hpp"
#include "pospoly/rng.hpp"

namespace pospoly {

namespace {

void check_rep_params(const RepParams& rp) {
    if (rp.d < 1 || rp.d >= rp.n) fail(Errc::BadParams, "need 1 <= d < n");
    if (rp.m < 0 || rp.M < 0) fail(Errc::BadParams, "m and M must be nonnegative");
}

int num_roots(const RepParams& rp) { return rp.d * (rp.n - rp.d); }

int root_index(const RepParams& rp, int i, int j) {
    return (i - 1) * (rp.n - rp.d) + (j - rp.d);
}

void check_label(const RepParams& rp, const TensorLabel& label) {
    if (static_cast<long long>(label.wedges.size()) != rp.m)
        fail(Errc::MalformedVector, "wrong number of wedge factors");
    for (const Wedge& w : label.wedges) {
        if (static_cast<int>(w.size()) != rp.d) fail(Errc::MalformedVector, "wedge of wrong degree");
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (w[t] < 1 || w[t] > rp.n) fail(Errc::MalformedVector, "wedge letter out of range");
            if (t > 0 && w[t] <= w[t - 1]) fail(Errc::MalformedVector, "wedge letters not increasing");
        }
    }
    if (static_cast<int>(label.mono.size()) != num_roots(rp))
        fail(Errc::MalformedVector, "wrong exponent vector length");
    long long deg = 0;
    for (int e : label.mono) {
        if (e < 0) fail(Errc::MalformedVector, "negative exponent");
        deg += e;
    }
    if (deg > rp.M) fail(Errc::MalformedVector, "polynomial degree above the truncation");
}

void add_term(ModuleVector& acc, TensorLabel label, Coeff coeff) {
    auto [it, inserted] = acc.emplace(std::move(label), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) acc.erase(it);
    }
}

/// Divides all coefficients by their gcd and makes the leading one positive.
void normalize(ModuleVector& v) {
    if (v.empty()) return;
    Coeff g = 0;
    for (const auto& [label, c] : v) g = boost::multiprecision::gcd(g, c);
    const bool flip = v.begin()->second < 0;
    for (auto& [label, c] : v) {
        c /= g;
        if (flip) c = -c;
    }
}

/// Incremental row-echelon basis over the integers. Elimination is by
/// cross-multiplication (no fractions); rows are kept gcd-reduced.
class RowBasis {
public:
    /// Reduces v against the current rows. Returns the normalized residue,
    /// empty when v was dependent.
    ModuleVector reduce(ModuleVector v) const {
        while (!v.empty()) {
            auto row_it = rows_.find(v.begin()->first);
            if (row_it == rows_.end()) break;
            const ModuleVector& row = row_it->second;
            const Coeff a = row.begin()->second;  // > 0 by normalization
            const Coeff b = v.begin()->second;
            ModuleVector next;
            auto vi = v.begin();
            auto ri = row.begin();
            while (vi != v.end() || ri != row.end()) {
                if (ri == row.end() || (vi != v.end() && vi->first < ri->first)) {
                    next.emplace_hint(next.end(), vi->first, a * vi->second);
                    ++vi;
                } else if (vi == v.end() || ri->first < vi->first) {
                    next.emplace_hint(next.end(), ri->first, -b * ri->second);
                    ++ri;
                } else {
                    Coeff c = a * vi->second - b * ri->second;
                    if (c != 0) next.emplace_hint(next.end(), vi->first, std::move(c));
                    ++vi;
                    ++ri;
                }
            }
            v = std::move(next);
        }
        normalize(v);
        return v;
    }

    /// Reduce-and-insert; returns the inserted row or empty if dependent.
    const ModuleVector* insert(ModuleVector v) {
        ModuleVector r = reduce(std::move(v));
        if (r.empty()) return nullptr;
        TensorLabel pivot = r.begin()->first;
        auto [it, ok] = rows_.emplace(std::move(pivot), std::move(r));
        (void)ok;
        return &it->second;
    }

    long long rank() const { return static_cast<long long>(rows_.size()); }
    std::size_t stored_terms() const {
        std::size_t total = 0;
        for (const auto& [pivot, row] : rows_) total += row.size();
        return total;
    }

private:
    std::map<TensorLabel, ModuleVector> rows_;  // keyed by pivot label
};

}  // namespace

ModuleVector cyclic_vector(const RepParams& rp) {
    check_rep_params(rp);
    TensorLabel label;
    Wedge ground(rp.d);
    std::iota(ground.begin(), ground.end(), 1);
    label.wedges.assign(rp.m, ground);
    label.mono.assign(num_roots(rp), 0);
    ModuleVector v;
    v.emplace(std::move(label), 1);
    return v;
}

ModuleVector apply_root(const RepParams& rp, int i, int j, const ModuleVector& v) {
    check_rep_params(rp);
    if (i < 1 || i > rp.d || j < rp.d || j > rp.n - 1)
        fail(Errc::BadParams, "root indices must satisfy 1 <= i <= d <= j <= n-1");
    const int target = j + 1;
    ModuleVector out;
    for (const auto& [label, coeff] : v) {
        check_label(rp, label);
        // Wedge part: Leibniz over the m factors.
        for (std::size_t t = 0; t < label.wedges.size(); ++t) {
            const Wedge& w = label.wedges[t];
            if (!std::binary_search(w.begin(), w.end(), i)) continue;
            if (std::binary_search(w.begin(), w.end(), target)) continue;
            int between = 0;
            for (int x : w)
                if (i < x && x < target) ++between;
            Wedge replaced;
            replaced.reserve(w.size());
            for (int x : w)
                if (x != i) replaced.push_back(x);
            replaced.insert(std::upper_bound(replaced.begin(), replaced.end(), target), target);
            TensorLabel next = label;
            next.wedges[t] = std::move(replaced);
            add_term(out, std::move(next), (between % 2 == 0) ? coeff : -coeff);
        }
        // Polynomial part: multiply by the variable, truncate above M.
        long long deg = std::accumulate(label.mono.begin(), label.mono.end(), 0LL);
        if (deg < rp.M) {
            TensorLabel next = label;
            ++next.mono[root_index(rp, i, j)];
            add_term(out, std::move(next), coeff);
        }
    }
    return out;
}

ModuleVector apply_monomial(const RepParams& rp, const IntPoint& exps, ModuleVector v) {
    if (static_cast<int>(exps.size()) != num_roots(rp))
        fail(Errc::MalformedInput, "exponent vector length does not match the root count");
    for (int idx = 0; idx < num_roots(rp) && !v.empty(); ++idx) {
        const int i = idx / (rp.n - rp.d) + 1;
        const int j = idx % (rp.n - rp.d) + rp.d;
        for (long long rep = 0; rep < exps[idx] && !v.empty(); ++rep)
            v = apply_root(rp, i, j, v);
    }
    return v;
}

long long pbw_grade(const RepParams& rp, const TensorLabel& label) {
    check_label(rp, label);
    long long inside = 0;
    for (const Wedge& w : label.wedges)
        for (int x : w)
            if (x <= rp.d) ++inside;
    long long deg = std::accumulate(label.mono.begin(), label.mono.end(), 0LL);
    return rp.m * rp.d - inside + deg;
}

long long cyclic_span_dim(const RepParams& rp, const RepCaps& caps) {
    check_rep_params(rp);
    RowBasis basis;
    std::deque<ModuleVector> queue;
    if (const ModuleVector* row = basis.insert(cyclic_vector(rp))) queue.push_back(*row);
    while (!queue.empty()) {
        ModuleVector v = std::move(queue.front());
        queue.pop_front();
        for (int i = 1; i <= rp.d; ++i)
            for (int j = rp.d; j <= rp.n - 1; ++j) {
                if (const ModuleVector* row = basis.insert(apply_root(rp, i, j, v)))
                    queue.push_back(*row);
                if (basis.rank() > caps.max_rank || basis.stored_terms() > caps.max_terms)
                    fail(Errc::CapExceeded, "cyclic closure exceeded the configured caps");
            }
    }
    return basis.rank();
}

BasisReport basis_check(const RepParams& rp, const RepCaps& caps) {
    check_rep_params(rp);
    const auto points = enumerate_points(root_poset(rp.d, rp.n).poset, Params{rp.m, rp.M});
    BasisReport report;
    report.expected = static_cast<long long>(points.size());
    report.independent = true;
    RowBasis basis;
    for (const IntPoint& s : points) {
        ModuleVector v = apply_monomial(rp, s, cyclic_vector(rp));
        if (basis.insert(std::move(v)) == nullptr) report.independent = false;
        if (basis.rank() > caps.max_rank || basis.stored_terms() > caps.max_terms)
            fail(Errc::CapExceeded, "family exceeded the configured caps");
    }
    report.rank = basis.rank();
    report.cyclic_dim = cyclic_span_dim(rp, caps);
    report.spans = (report.rank == report.cyclic_dim);
    return report;
}

RelationReport relation_check(const RepParams& rp, int samples, std::uint64_t seed) {
    check_rep_params(rp);
    if (samples < 1) fail(Errc::BadParams, "need at least one sample");
    const int roots = num_roots(rp);
    Rng rng(seed);
    RelationReport report;
    report.samples = samples;
    report.seed = seed;

    for (int trial = 0; trial < samples; ++trial) {
        const long long max_r = rp.m >= 1 ? roots : std::min<long long>(roots, rp.M + 1);
        const int r = static_cast<int>(1 + rng.below(max_r));
        // r distinct roots by partial Fisher-Yates.
        std::vector<int> pool(roots);
        std::iota(pool.begin(), pool.end(), 0);
        for (int t = 0; t < r; ++t)
            std::swap(pool[t], pool[t + rng.below(roots - t)]);
        IntPoint exps(roots, 0);
        for (int t = 0; t < r; ++t) exps[pool[t]] = 1;
        long long extra = r * rp.m + rp.M + 1 - r;
        while (extra-- > 0) ++exps[pool[rng.below(r)]];

        ModuleVector v = apply_monomial(rp, exps, cyclic_vector(rp));
        if (!v.empty())
            fail(Errc::RelationViolated,
                 "monomial above the bound did not annihilate the cyclic vector");
    }

    // Boundary probe: a lattice point with exponent sum exactly r*m + M over
    // r = |support| roots indexes a basis vector, which must be nonzero.
    const auto points = enumerate_points(root_poset(rp.d, rp.n).poset, Params{rp.m, rp.M});
    for (const IntPoint& s : points) {
        long long sum = 0, support = 0;
        for (long long e : s) {
            sum += e;
            if (e > 0) ++support;
        }
        if (support >= 1 && sum == support * rp.m + rp.M) {
            report.boundary_found = true;
            report.boundary_point = s;
            ModuleVector v = apply_monomial(rp, s, cyclic_vector(rp));
            if (v.empty())
                fail(Errc::RelationViolated, "boundary monomial vanished unexpectedly");
            break;
        }
    }
    return report;
}

GradingReport pbw_grading_check(const RepParams& rp, const RepCaps& caps) {
    check_rep_params(rp);
    // Enumerate every label of the ambient space.
    std::vector<Wedge> all_wedges;
    Wedge cur;
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(cur.size()) == rp.d) {
            all_wedges.push_back(cur);
            return;
        }
        for (int x = from; x <= rp.n; ++x) {
            cur.push_back(x);
            choose(x + 1);
            cur.pop_back();
        }
    };
    choose(1);

    std::vector<std::vector<int>> monos;
    std::vector<int> mono(num_roots(rp), 0);
    std::function<void(int, long long)> fill = [&](int pos, long long left) {
        if (pos == num_roots(rp)) {
            monos.push_back(mono);
            return;
        }
        for (long long e = 0; e <= left; ++e) {
            mono[pos] = static_cast<int>(e);
            fill(pos + 1, left - e);
        }
        mono[pos] = 0;
    };
    fill(0, rp.M);

    double label_count = static_cast<double>(monos.size());
    for (long long t = 0; t < rp.m; ++t) label_count *= static_cast<double>(all_wedges.size());
    if (label_count > static_cast<double>(caps.max_terms))
        fail(Errc::CapExceeded, "ambient label count exceeds the cap");

    GradingReport report;
    report.ok = true;
    std::vector<Wedge> factors(rp.m, all_wedges.empty() ? Wedge{} : all_wedges[0]);
    std::function<void(int)> visit = [&](int slot) {
        if (slot == rp.m) {
            for (const auto& mo : monos) {
                TensorLabel label{factors, mo};
                const long long grade = pbw_grade(rp, label);
                ModuleVector one;
                one.emplace(label, 1);
                for (int i = 1; i <= rp.d; ++i)
                    for (int j = rp.d; j <= rp.n - 1; ++j)
                        for (const auto& [next, c] : apply_root(rp, i, j, one))
                            if (pbw_grade(rp, next) != grade + 1) report.ok = false;
                ++report.labels_checked;
            }
            return;
        }
        for (const Wedge& w : all_wedges) {
            factors[slot] = w;
            visit(slot + 1);
        }
    };
    if (rp.m == 0)
        visit(0);
    else if (!all_wedges.empty())
        visit(0);
    return report;
}

}  // namespace pospoly
