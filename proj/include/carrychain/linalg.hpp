#pragma once

#include "carrychain/matrix.hpp"
#include "carrychain/polynomial.hpp"

namespace carrychain {

/// Exact determinant by fraction-free (Bareiss) elimination on the integer
/// matrix obtained by clearing each row's denominators.
/// Throws std::invalid_argument for a non-square matrix.
Rational determinant(const Matrix& a);

/// det(xI - A), monic of degree rows(A), by the Faddeev-LeVerrier recurrence.
/// Throws std::invalid_argument for a non-square matrix.
Polynomial char_poly(const Matrix& a);

}  // namespace carrychain
