#pragma once

/**
 * @file eulerian.hpp
 * @brief Generalized Eulerian numbers with a real parameter p >= 1.
 *
 *   v_{i,j}(n) = sum_{r=0}^{j} (-1)^r C(n+1, r) (p(j - r) + 1)^{n-i}
 *
 * for 0 <= i <= n and 0 <= j <= n + 1, with v_{i,-1}(n) = 0. The top row
 * E_p(n, j) = v_{0,j}(n) gives the Eulerian numbers at p = 1 and the MacMahon
 * numbers at p = 2; the full array supplies left eigenvectors of the carries
 * chain.
 */

#include "carrychain/rational.hpp"
#include "carrychain/verification.hpp"

#include <vector>

namespace carrychain {

/// Closed form v_{i,j}(n). j = -1 yields 0. Throws std::out_of_range for
/// i outside [0, n] or j outside [-1, n + 1], std::invalid_argument for n < 0.
Rational v_closed(int n, const Rational& p, int i, int j);

/// E_p(n, k) = v_{0,k}(n).
Rational eulerian(int n, const Rational& p, int k);

/// (n+1) x (n+2) array of v_{i,j}(n).
struct EulerianArray {
    int n = 0;
    Rational p;
    std::vector<std::vector<Rational>> values;

    const Rational& operator()(int i, int j) const {
        return values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

EulerianArray eulerian_array(int n, const Rational& p);

/// Rows 0..n_max of E_p, row n holding E_p(n, 0..n).
struct EulerianTriangle {
    Rational p;
    std::vector<std::vector<Rational>> rows;
};

/// Built from E_p(0,0) = 1 by
///   E_p(n, k) = (pk + 1) E_p(n-1, k) + (p(n + 1 - k) - 1) E_p(n-1, k - 1),
/// the i = 0 case of the array recurrence, with E_p(n, k) = 0 outside 0 <= k <= n.
EulerianTriangle triangle_recurrence(int n_max, const Rational& p);

/// Checks v_{i,j}(n) = [p(n+1-j) - 1] v_{i,j-1}(n-1) + (pj + 1) v_{i,j}(n-1)
/// for 0 <= i <= n-1, 0 <= j <= n. Throws std::invalid_argument for n < 1.
VerificationReport array_recurrence_check(int n, const Rational& p);

/// sum_j v_{i,j}(n) for i = 0..n; p^n n! at i = 0 and 0 elsewhere.
std::vector<Rational> row_sums(int n, const Rational& p);

/// Checks v_{i,n-1-j}(n) = (-1)^i v_{i,j}(n) at p = 1, for i < n, j < n.
VerificationReport unit_symmetry_check(int n);

/// Checks v^{(p*)}_{i,n-j}(n) = (-1)^i (p*/p)^{n-i} v^{(p)}_{i,j}(n) with
/// 1/p + 1/p* = 1. Throws std::invalid_argument unless p > 1.
VerificationReport dual_symmetry_check(int n, const Rational& p);

/// Dispatches to the p = 1 or the p > 1 relation.
VerificationReport symmetry_check(int n, const Rational& p);

/// p* = p / (p - 1) for p > 1.
Rational dual_parameter(const Rational& p);

/// E_p(n, 0..m-1) / (p^n n!) with m = n + 1 for p != 1 and m = n for p = 1
/// (m = 1 when n = 0).
std::vector<Rational> stationary(int n, const Rational& p);

/// Floating evaluation of E_p(n, k) for non-rational p. Not exact.
double eulerian_approx(int n, double p, int k);

}  // namespace carrychain
