#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pospoly/polytope.hpp"
#include "pospoly/poset.hpp"

namespace pospoly {

/// The d x (n-d) grid poset of radical roots a_{i,j}, 1 <= i <= d <= j <= n-1,
/// ordered componentwise. Its maximal chains are the Dyck paths.
struct RootPoset {
    int d = 0;
    int n = 0;
    Poset poset;

    int num_roots() const { return d * (n - d); }
    /// Element index of a_{i,j}; rows are i, columns are j.
    int index(int i, int j) const { return (i - 1) * (n - d) + (j - d); }
    std::pair<int, int> root_at(int idx) const {
        return {idx / (n - d) + 1, idx % (n - d) + d};
    }
};

std::string root_label(int i, int j);

/// Builds R(d) for 1 <= d < n, with canonical labels "a_i_j".
RootPoset root_poset(int d, int n);

/// All maximal chains of R(d); each has n-1 elements, runs from a_{1,d}
/// to a_{d,n-1}, and steps by incrementing one coordinate.
std::vector<Chain> dyck_paths(const RootPoset& rp);

/// Lattice points with every Dyck-path sum at most m: the monomial-basis
/// index set of the degree-m fundamental-type module.
std::vector<IntPoint> fflv_points(int d, int n, long long m);

/// Product formula dimension of that module, evaluated exactly; an
/// independent count the lattice points must reproduce.
BigInt weyl_dim(int d, int n, long long m);

/// One inequality: sum of coordinates over `support` bounded by `bound`.
struct Inequality {
    std::vector<int> support;
    long long bound = 0;
};

/// The r-fold Dyck-path union inequalities (sum <= r*m + M) for all
/// r <= r_max, deduplicated by support keeping the smallest bound.
/// r_max is clamped to min(d, n-d); unions of more paths add nothing.
std::vector<Inequality> inequality_system(int d, int n, long long m, long long M, int r_max,
                                          std::size_t cap = 200'000);

}  // namespace pospoly
