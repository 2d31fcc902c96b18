#include "carrychain/uniformsum.hpp"

#include <cmath>
#include <stdexcept>

namespace carrychain {

Rational irwin_hall_cdf(int n, const Rational& x) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (x.sign() <= 0) return n == 0 ? Rational(1) : Rational(0);
    if (x >= Rational(n)) return Rational(1);
    Rational sum;
    for (int k = 0; k <= n && Rational(k) < x; ++k) {
        const Rational term = Rational(binomial(n, k)) * pow(x - Rational(k), n);
        if (k % 2 == 0) sum += term; else sum -= term;
    }
    return sum / Rational(factorial(static_cast<unsigned long>(n)));
}

Rational interval_prob(int n, const Rational& p, int k) {
    if (n < 1) throw std::invalid_argument("interval_prob needs n >= 1");
    if (p < Rational(1)) throw std::invalid_argument("p must be at least 1");
    const Rational left = p.reciprocal() + Rational(k - 1);
    return irwin_hall_cdf(n, left + Rational(1)) - irwin_hall_cdf(n, left);
}

std::vector<Rational> interval_probs(int n, const Rational& p) {
    std::vector<Rational> out;
    for (int k = 0; k <= n; ++k) out.push_back(interval_prob(n, p, k));
    return out;
}

namespace {

double cdf_approx(int n, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= n) return 1.0;
    double sum = 0.0;
    for (int k = 0; k <= n && k < x; ++k) {
        const double term = binomial(n, k).get_d() * std::pow(x - k, n);
        sum += k % 2 == 0 ? term : -term;
    }
    return sum / factorial(static_cast<unsigned long>(n)).get_d();
}

}  // namespace

double interval_prob_approx(int n, double p, int k) {
    if (n < 1 || p < 1.0) throw std::invalid_argument("interval_prob_approx needs n >= 1 and p >= 1");
    const double left = 1.0 / p + (k - 1);
    return cdf_approx(n, left + 1.0) - cdf_approx(n, left);
}

}  // namespace carrychain
