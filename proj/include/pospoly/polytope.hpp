#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "pospoly/poset.hpp"

namespace pospoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// One integer coordinate per poset element.
using IntPoint = std::vector<long long>;

/// The two dilation parameters: per-chain budget m and global slack M.
struct Params {
    long long m = 0;
    long long M = 0;
};

/// Witness for the integer decomposition of a point of S(m,M):
/// the point equals the sum of the antichain indicator vectors plus the
/// remainder, the remainder is nonnegative with coordinate sum <= M.
struct DecompositionCert {
    std::vector<Antichain> antichains;  // exactly m entries, possibly empty
    IntPoint remainder;
};

enum class Method { Brute, Flow };

inline constexpr int kDefaultBruteCap = 20;

/// All-subset width table for small posets; backs the brute-force oracle.
/// Memory is one byte per subset, so construction is capped.
class SubsetWidthTable {
public:
    SubsetWidthTable(const Poset& poset, int cap = kDefaultBruteCap);
    int width(std::uint32_t mask) const { return table_[mask]; }
    int ground_size() const { return n_; }

    /// max over all subsets of (sum of z over the subset - m * width),
    /// floored at zero.
    long long excess(const IntPoint& z, long long m) const;

private:
    int n_;
    std::vector<std::uint8_t> table_;
    mutable std::vector<long long> sums_;  // scratch, reused across calls
};

/// The violation excess: max(0, max over subposets P' of sum_{P'} z - m*w(P')).
/// `Brute` enumerates all subsets (capped); `Flow` solves the equivalent
/// chain-packing program as a min-cost flow and has no size cap.
long long violation_excess(const Poset& poset, const IntPoint& z, long long m,
                           Method method = Method::Flow, int brute_cap = kDefaultBruteCap);

/// Exact-arithmetic core of the flow oracle; z may be any integers.
BigInt violation_excess_exact(const Poset& poset, const std::vector<BigInt>& z, const BigInt& m);

/// z lies in S(m,M): nonnegative and violation excess at most M.
bool membership(const Poset& poset, const IntPoint& z, Params params);

/// Rational membership in the polytope X(m,M), decided exactly by clearing
/// denominators and running the integer oracle on the scaled instance.
bool membership(const Poset& poset, const std::vector<Rational>& z, Params params);

/// All points of S(m,M) in lexicographic order over the fixed linear
/// extension. DFS with the per-coordinate bound m+M and chain partial-sum
/// pruning; leaves are checked by the membership oracle.
std::vector<IntPoint> enumerate_points(const Poset& poset, Params params);

/// For z >= 0 with positive excess, an index d with z_d >= 1 whose removal
/// lowers the excess: M(z - e_d) <= M(z) - 1. Lowest such index is returned.
int strip_unit(const Poset& poset, const IntPoint& z, long long m);

/// For z in S(m,0) with m >= 1: the minimal elements of the support of z.
/// Subtracting their indicator leaves a point of S(m-1,0).
Antichain strip_antichain(const Poset& poset, const IntPoint& z, long long m);

/// Constructive integer decomposition of z in S(m,M): strips units while the
/// excess is positive (at most M times), then peels m antichain layers.
DecompositionCert decompose(const Poset& poset, const IntPoint& z, Params params);

/// Specialization of `decompose` to the all-ones vector: a partition of the
/// poset into m antichains plus a block of size at most M.
DecompositionCert partition_poset(const Poset& poset, Params params);

/// Verifies S(p1) + S(p2) == S(p1+p2) by enumerating both sides and comparing
/// the pairwise-sum set with the enumerated sum set.
bool minkowski_check(const Poset& poset, Params p1, Params p2,
                     std::size_t pair_cap = 100'000'000);

}  // namespace pospoly
