#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "pospoly/grassmann.hpp"

namespace pospoly {

/// Shape of the ambient tensor space: m wedge factors of degree d in n
/// letters, times the polynomial factor truncated above total degree M.
struct RepParams {
    int d = 0;
    int n = 0;
    long long m = 0;
    long long M = 0;
};

/// Strictly increasing d-subset of 1..n labelling a wedge monomial.
using Wedge = std::vector<int>;

/// Basis label of the tensor space: one wedge per factor plus the exponent
/// vector of the truncated polynomial part (indexed like the root poset).
struct TensorLabel {
    std::vector<Wedge> wedges;
    std::vector<int> mono;
    auto operator<=>(const TensorLabel&) const = default;
};

using Coeff = BigInt;

/// Sparse exact-integer vector; zero coefficients are never stored.
using ModuleVector = std::map<TensorLabel, Coeff>;

struct RepCaps {
    long long max_rank = 4000;
    std::size_t max_terms = 4'000'000;
};

/// The cyclic vector: every wedge factor is {1..d}, polynomial part 1.
ModuleVector cyclic_vector(const RepParams& rp);

/// Lowering action of the root operator (i, j): on each wedge factor the
/// letter i is replaced by j+1 (sign by transposition count), and the
/// polynomial part is multiplied by the corresponding variable, dropping
/// terms that would exceed degree M.
ModuleVector apply_root(const RepParams& rp, int i, int j, const ModuleVector& v);

/// Applies prod f_{i,j}^{exps[idx]}; the operators commute so the order is
/// immaterial. Exponents are indexed by root index.
ModuleVector apply_monomial(const RepParams& rp, const IntPoint& exps, ModuleVector v);

/// Number of lowering steps separating a label from the cyclic one.
long long pbw_grade(const RepParams& rp, const TensorLabel& label);

/// Dimension of the span of the cyclic vector under all root operators:
/// breadth-first closure with an incremental fraction-free row basis.
long long cyclic_span_dim(const RepParams& rp, const RepCaps& caps = {});

struct BasisReport {
    bool independent = false;
    long long rank = 0;
    long long expected = 0;   // number of lattice points indexing the family
    long long cyclic_dim = 0;
    bool spans = false;
};

/// Builds the vector f^s (cyclic) for every lattice point s of S(m,M) on the
/// root poset and reports independence and whether they span the cyclic span.
BasisReport basis_check(const RepParams& rp, const RepCaps& caps = {});

struct RelationReport {
    int samples = 0;
    std::uint64_t seed = 0;
    bool boundary_found = false;
    IntPoint boundary_point;  // empty when no boundary tuple exists
};

/// Random monomials with exponent sum r*m + M + 1 over r distinct roots must
/// kill the cyclic vector; one boundary monomial with sum r*m + M (when a
/// lattice point with that shape exists) must not. Throws RelationViolated
/// on any counterexample.
RelationReport relation_check(const RepParams& rp, int samples, std::uint64_t seed);

struct GradingReport {
    long long labels_checked = 0;
    bool ok = false;
};

/// Verifies on every label of the ambient space that each root operator
/// raises the grade by exactly one or annihilates the term.
GradingReport pbw_grading_check(const RepParams& rp, const RepCaps& caps = {});

}  // namespace pospoly
