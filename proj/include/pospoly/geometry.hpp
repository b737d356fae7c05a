#pragma once

#include <string>
#include <vector>

#include "pospoly/linalg.hpp"

namespace pospoly {

/// Polynomial in one variable q with integer coefficients, coefficient of
/// q^i at index i, trailing zeros trimmed.
struct QPolynomial {
    std::vector<long long> coeffs;

    QPolynomial() = default;
    explicit QPolynomial(std::vector<long long> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    long long at(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[k] : 0;
    }
    long long eval_at_one() const;
    bool is_palindromic() const;
    std::string str() const;

    bool operator==(const QPolynomial&) const = default;
    QPolynomial& operator+=(const QPolynomial& other);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
};

/// 1 + q + ... + q^{len-1}; the Poincare polynomial of projective space.
QPolynomial q_ones(int len);

/// The q-binomial coefficient via the Pascal recurrence; the coefficient sum
/// equals the ordinary binomial.
QPolynomial gaussian_binomial(int n, int d);

/// Index k runs over 0..min(d, n-d); entry k collects q^{dim C_I} over the
/// d-subsets I of [n] with exactly k elements above d, where
/// dim C_I = d(n-d) - sum_t (i_t - t). The subset {1..d} gives the open cell.
std::vector<QPolynomial> strata_poincare(int d, int n);

/// Sum over k of the stratum polynomial times the projective-space factor of
/// dimension k^2 - 1 (a point for k <= 1).
QPolynomial graph_poincare(int d, int n);

/// A point of the Grassmannian: d independent row vectors of length n with
/// exact rational entries. Columns 1..d span the minus summand of the
/// ambient space, columns d+1..n the plus summand.
struct Subspace {
    RatMatrix rows;

    int d() const { return static_cast<int>(rows.size()); }
    int n() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};

/// The stratum index: d minus the rank of the first d columns
/// (= the dimension of the intersection with the plus summand).
/// Throws RankDeficient when the rows are dependent.
int stratum_of(const Subspace& u);

struct FiberDescription {
    int k = 0;
    /// d x (n-d) matrices; row i holds the image of basis vector i of the
    /// minus summand in plus-summand coordinates. Exactly k^2 of them.
    std::vector<RatMatrix> basis;
    long long proj_dim = 0;  // k^2 - 1, or 0 for k <= 1
};

/// Solves the two containment conditions cutting out the fiber of the graph
/// closure over u: image inside the intersection with the plus summand,
/// kernel containing the projection to the minus summand.
FiberDescription fiber_of(const Subspace& u);

struct PreimageRow {
    int k = 0;
    long long stratum_dim = 0;
    long long fiber_proj_dim = 0;
    long long total = 0;
};

/// For k = 1..min(d,n-d): stratum dimension plus fiber dimension, which is
/// the constant d(n-d) - 1.
std::vector<PreimageRow> preimage_dim_table(int d, int n);

}  // namespace pospoly
