#pragma once

#include "carrychain/rational.hpp"

#include <vector>

namespace carrychain {

/// Pr(U_1 + ... + U_n <= x) for i.i.d. uniform [0,1] variables:
/// (1/n!) sum_k (-1)^k C(n,k) max(x - k, 0)^n. Clamped to 0 and 1 outside (0, n).
Rational irwin_hall_cdf(int n, const Rational& x);

/// Pr(S_n in 1/p + [k - 1, k]); equals E_p(n, k) / (p^n n!).
/// Throws std::invalid_argument for n < 1 or p < 1.
Rational interval_prob(int n, const Rational& p, int k);

/// interval_prob for k = 0..n.
std::vector<Rational> interval_probs(int n, const Rational& p);

/// Floating version for irrational p; not exact.
double interval_prob_approx(int n, double p, int k);

}  // namespace carrychain
