#include "pospoly/polytope.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <unordered_set>

#include "pospoly/errors.hpp"

namespace pospoly {

namespace {

void check_point(const Poset& poset, const IntPoint& z) {
    if (static_cast<int>(z.size()) != poset.size())
        fail(Errc::MalformedInput, "vector length does not match poset size");
}

void check_params(Params p) {
    if (p.m < 0 || p.M < 0) fail(Errc::BadParams, "m and M must be nonnegative");
}

/// Min-cost flow via successive shortest augmenting paths. Costs are exact
/// integers; the first pass tolerates negative arc costs (Bellman-Ford),
/// later passes run Dijkstra on reduced costs.
class Mcmf {
public:
    explicit Mcmf(int n) : graph_(n) {}

    void add_arc(int from, int to, int cap, BigInt cost) {
        graph_[from].push_back({to, cap, cost, graph_[to].size()});
        graph_[to].push_back({from, 0, -std::move(cost), graph_[from].size() - 1});
    }

    /// Minimum total cost over flows of any value from s to t. Augments one
    /// shortest path at a time while its cost is negative; path costs are
    /// nondecreasing, so the first nonnegative one ends the search.
    BigInt min_cost_any_flow(int s, int t) {
        const int n = static_cast<int>(graph_.size());
        std::vector<BigInt> pot(n, 0);
        std::vector<char> reached(n, 0);
        bellman_ford(s, pot, reached);
        if (!reached[t]) return 0;

        BigInt total = 0;
        std::vector<BigInt> dist(n);
        std::vector<int> par_node(n), par_arc(n);
        while (true) {
            if (!dijkstra(s, t, pot, dist, reached, par_node, par_arc)) break;
            BigInt path_cost = dist[t] + pot[t];  // pot[s] stays 0
            if (path_cost >= 0) break;
            int bottleneck = std::numeric_limits<int>::max();
            for (int v = t; v != s; v = par_node[v])
                bottleneck = std::min(bottleneck, graph_[par_node[v]][par_arc[v]].cap);
            for (int v = t; v != s; v = par_node[v]) {
                Arc& a = graph_[par_node[v]][par_arc[v]];
                a.cap -= bottleneck;
                graph_[a.to][a.rev].cap += bottleneck;
            }
            total += path_cost * bottleneck;
            for (int v = 0; v < n; ++v)
                pot[v] += reached[v] ? std::min(dist[v], dist[t]) : dist[t];
        }
        return total;
    }

private:
    struct Arc {
        int to;
        int cap;
        BigInt cost;
        std::size_t rev;
    };

    std::vector<std::vector<Arc>> graph_;

    void bellman_ford(int s, std::vector<BigInt>& dist, std::vector<char>& reached) {
        const int n = static_cast<int>(graph_.size());
        dist.assign(n, 0);
        reached.assign(n, 0);
        reached[s] = 1;
        for (int round = 0; round < n; ++round) {
            bool changed = false;
            for (int u = 0; u < n; ++u) {
                if (!reached[u]) continue;
                for (const Arc& a : graph_[u]) {
                    if (a.cap <= 0) continue;
                    BigInt cand = dist[u] + a.cost;
                    if (!reached[a.to] || cand < dist[a.to]) {
                        reached[a.to] = 1;
                        dist[a.to] = std::move(cand);
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
    }

    bool dijkstra(int s, int t, const std::vector<BigInt>& pot, std::vector<BigInt>& dist,
                  std::vector<char>& reached, std::vector<int>& par_node,
                  std::vector<int>& par_arc) {
        const int n = static_cast<int>(graph_.size());
        dist.assign(n, 0);
        reached.assign(n, 0);
        std::vector<char> done(n, 0);
        using Entry = std::pair<BigInt, int>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        dist[s] = 0;
        reached[s] = 1;
        heap.emplace(0, s);
        while (!heap.empty()) {
            auto [d, u] = heap.top();
            heap.pop();
            if (done[u]) continue;
            done[u] = 1;
            for (std::size_t idx = 0; idx < graph_[u].size(); ++idx) {
                const Arc& a = graph_[u][idx];
                if (a.cap <= 0) continue;
                BigInt cand = d + a.cost + pot[u] - pot[a.to];
                if (!reached[a.to] || cand < dist[a.to]) {
                    reached[a.to] = 1;
                    dist[a.to] = cand;
                    par_node[a.to] = u;
                    par_arc[a.to] = static_cast<int>(idx);
                    heap.emplace(std::move(cand), a.to);
                }
            }
        }
        return reached[t] != 0;
    }
};

}  // namespace

SubsetWidthTable::SubsetWidthTable(const Poset& poset, int cap) : n_(poset.size()) {
    if (n_ > cap || n_ > 25)
        fail(Errc::BruteSizeExceeded, "subset enumeration beyond cap: poset size " +
                                          std::to_string(n_) + " > " + std::to_string(std::min(cap, 25)));
    std::vector<std::uint32_t> comp(n_, 0);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (a != b && poset.comparable(a, b)) comp[a] |= 1u << b;
    const std::size_t total = std::size_t{1} << n_;
    table_.assign(total, 0);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        const int e = std::countr_zero(mask);
        const std::uint32_t without = mask & (mask - 1);
        const std::uint32_t incomp = without & ~comp[e];
        table_[mask] = static_cast<std::uint8_t>(
            std::max<int>(table_[without], 1 + table_[incomp]));
    }
    sums_.assign(total, 0);
}

long long SubsetWidthTable::excess(const IntPoint& z, long long m) const {
    const std::size_t total = std::size_t{1} << n_;
    long long best = 0;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        sums_[mask] = sums_[mask ^ low] + z[std::countr_zero(low)];
        best = std::max(best, sums_[mask] - m * table_[mask]);
    }
    return best;
}

BigInt violation_excess_exact(const Poset& poset, const std::vector<BigInt>& z, const BigInt& m) {
    if (static_cast<int>(z.size()) != poset.size())
        fail(Errc::MalformedInput, "vector length does not match poset size");
    if (m < 0) fail(Errc::BadParams, "m must be nonnegative");
    const int n = poset.size();
    if (n == 0) return 0;
    // Chain-packing network: each element splits into an in/out pair carrying
    // cost -z, chains run source -> elements -> sink, ending a chain costs m.
    const int src = 2 * n;
    const int sink = 2 * n + 1;
    Mcmf flow(2 * n + 2);
    for (int b = 0; b < n; ++b) {
        flow.add_arc(src, 2 * b, 1, 0);
        flow.add_arc(2 * b, 2 * b + 1, 1, -z[b]);
        flow.add_arc(2 * b + 1, sink, 1, m);
        for (int c = 0; c < n; ++c)
            if (poset.less(b, c)) flow.add_arc(2 * b + 1, 2 * c, 1, 0);
    }
    return -flow.min_cost_any_flow(src, sink);
}

long long violation_excess(const Poset& poset, const IntPoint& z, long long m, Method method,
                           int brute_cap) {
    check_point(poset, z);
    if (m < 0) fail(Errc::BadParams, "m must be nonnegative");
    if (method == Method::Brute) {
        SubsetWidthTable table(poset, brute_cap);
        return table.excess(z, m);
    }
    std::vector<BigInt> zz(z.begin(), z.end());
    return violation_excess_exact(poset, zz, m).convert_to<long long>();
}

bool membership(const Poset& poset, const IntPoint& z, Params params) {
    check_point(poset, z);
    check_params(params);
    for (long long v : z)
        if (v < 0) return false;
    return violation_excess(poset, z, params.m) <= params.M;
}

bool membership(const Poset& poset, const std::vector<Rational>& z, Params params) {
    if (static_cast<int>(z.size()) != poset.size())
        fail(Errc::MalformedInput, "vector length does not match poset size");
    check_params(params);
    BigInt scale = 1;
    for (const Rational& v : z) {
        if (v < 0) return false;
        scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(v));
    }
    std::vector<BigInt> scaled(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        scaled[i] = boost::multiprecision::numerator(z[i]) *
                    (scale / boost::multiprecision::denominator(z[i]));
    return violation_excess_exact(poset, scaled, BigInt(params.m) * scale) <=
           BigInt(params.M) * scale;
}

std::vector<IntPoint> enumerate_points(const Poset& poset, Params params) {
    check_params(params);
    const int n = poset.size();
    if (n == 0) return {IntPoint{}};
    const long long bound = params.m + params.M;
    const auto ext = poset.linear_extension();
    const auto cover = poset.min_chain_cover();
    std::vector<int> chain_id(n, 0);
    for (std::size_t c = 0; c < cover.size(); ++c)
        for (int e : cover[c]) chain_id[e] = static_cast<int>(c);
    std::vector<long long> chain_sum(cover.size(), 0);

    // Small posets get the precomputed width table for the leaf check.
    std::optional<SubsetWidthTable> table;
    if (n <= 12) table.emplace(poset, 12);

    std::vector<IntPoint> out;
    IntPoint z(n, 0);
    std::function<void(int)> dfs = [&](int pos) {
        if (pos == n) {
            const bool inside =
                table ? table->excess(z, params.m) <= params.M
                      : violation_excess(poset, z, params.m, Method::Flow) <= params.M;
            if (inside) out.push_back(z);
            return;
        }
        const int e = ext[pos];
        const int c = chain_id[e];
        for (long long v = 0; v <= bound; ++v) {
            if (chain_sum[c] + v > bound) break;
            z[e] = v;
            chain_sum[c] += v;
            dfs(pos + 1);
            chain_sum[c] -= v;
        }
        z[e] = 0;
    };
    dfs(0);
    return out;
}

int strip_unit(const Poset& poset, const IntPoint& z, long long m) {
    check_point(poset, z);
    for (long long v : z)
        if (v < 0) fail(Errc::MalformedInput, "strip_unit requires a nonnegative vector");
    const long long excess = violation_excess(poset, z, m);
    if (excess == 0) fail(Errc::NoExcess, "violation excess is zero, nothing to strip");
    IntPoint reduced = z;
    for (int d = 0; d < poset.size(); ++d) {
        if (z[d] < 1) continue;
        --reduced[d];
        if (violation_excess(poset, reduced, m) <= excess - 1) return d;
        ++reduced[d];
    }
    fail(Errc::SearchExhausted, "no unit strip lowered the excess (bug)");
}

Antichain strip_antichain(const Poset& poset, const IntPoint& z, long long m) {
    check_point(poset, z);
    if (m < 1) fail(Errc::BadParams, "antichain stripping needs m >= 1");
    if (!membership(poset, z, Params{m, 0}))
        fail(Errc::NotInSm0, "vector is not in S(m,0)");
    std::vector<int> support;
    for (int e = 0; e < poset.size(); ++e)
        if (z[e] > 0) support.push_back(e);
    return poset.minimal_elements(support);
}

DecompositionCert decompose(const Poset& poset, const IntPoint& z, Params params) {
    check_point(poset, z);
    check_params(params);
    if (!membership(poset, z, params)) fail(Errc::NotMember, "vector is not in S(m,M)");
    DecompositionCert cert;
    cert.remainder.assign(z.size(), 0);
    IntPoint cur = z;
    // Unit strips: each lowers the excess by at least one, so at most M of them.
    while (violation_excess(poset, cur, params.m) > 0) {
        const int d = strip_unit(poset, cur, params.m);
        --cur[d];
        ++cert.remainder[d];
    }
    for (long long budget = params.m; budget >= 1; --budget) {
        Antichain layer = strip_antichain(poset, cur, budget);
        for (int e : layer) --cur[e];
        cert.antichains.push_back(std::move(layer));
    }
    for (long long v : cur)
        if (v != 0) fail(Errc::SearchExhausted, "nonzero residue after m antichain strips (bug)");
    return cert;
}

DecompositionCert partition_poset(const Poset& poset, Params params) {
    check_params(params);
    IntPoint ones(poset.size(), 1);
    if (violation_excess(poset, ones, params.m) > params.M)
        fail(Errc::HypothesisFails, "|P'| <= m*w(P') + M fails for some subposet");
    return decompose(poset, ones, params);
}

namespace {

// Fits every coordinate of every point into one 64-bit key.
bool packable(int n, long long max_coord) { return n <= 8 && max_coord < 256; }

std::uint64_t pack(const IntPoint& z) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        key |= static_cast<std::uint64_t>(z[i]) << (8 * i);
    return key;
}

}  // namespace

bool minkowski_check(const Poset& poset, Params p1, Params p2, std::size_t pair_cap) {
    check_params(p1);
    check_params(p2);
    const Params psum{p1.m + p2.m, p1.M + p2.M};
    const auto s1 = enumerate_points(poset, p1);
    const auto s2 = enumerate_points(poset, p2);
    const auto target = enumerate_points(poset, psum);
    if (s1.size() * s2.size() > pair_cap)
        fail(Errc::BruteSizeExceeded, "pairwise sum count beyond cap");

    const int n = poset.size();
    if (packable(n, psum.m + psum.M)) {
        std::unordered_set<std::uint64_t> sums;
        sums.reserve(target.size() * 2 + 1);
        IntPoint buf(n, 0);
        for (const auto& x : s1)
            for (const auto& y : s2) {
                for (int i = 0; i < n; ++i) buf[i] = x[i] + y[i];
                sums.insert(pack(buf));
            }
        if (sums.size() != target.size()) return false;
        for (const auto& z : target)
            if (!sums.count(pack(z))) return false;
        return true;
    }
    std::set<IntPoint> sums;
    IntPoint buf(n, 0);
    for (const auto& x : s1)
        for (const auto& y : s2) {
            for (int i = 0; i < n; ++i) buf[i] = x[i] + y[i];
            sums.insert(buf);
        }
    return sums == std::set<IntPoint>(target.begin(), target.end());
}

}  // namespace pospoly
