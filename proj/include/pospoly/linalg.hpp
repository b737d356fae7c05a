#pragma once

#include <vector>

#include "pospoly/polytope.hpp"

namespace pospoly {

using RatMatrix = std::vector<std::vector<Rational>>;

/// Gauss-Jordan over the rationals, in place. Returns the rank; afterwards
/// the nonzero rows are in reduced row-echelon form.
int rref(RatMatrix& mat);

int rank_of(RatMatrix mat);

/// Basis of the right kernel {v : mat * v = 0}, one vector per free column,
/// in increasing free-column order.
std::vector<std::vector<Rational>> right_kernel(const RatMatrix& mat);

}  // namespace pospoly
