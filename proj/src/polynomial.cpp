#include "carrychain/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace carrychain {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
    Polynomial out({Rational(1)});
    for (const auto& r : roots) out = out * linear_factor(r);
    return out;
}

Rational Polynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational();
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    std::vector<Rational> c = coeffs_;
    for (auto& v : c) v *= factor;
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
    const Rational lead = divisor.leading();
    for (int k = degree() - dd; k >= 0; --k) {
        const Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k + i)] -= q * divisor.coeffs_[static_cast<std::size_t>(i)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::vector<mpz_class> Polynomial::primitive_integer_coefficients() const {
    if (coeffs_.empty()) return {};
    mpz_class lcm_den = 1;
    for (const auto& c : coeffs_) lcm_den = lcm(lcm_den, c.den());
    std::vector<mpz_class> ints;
    ints.reserve(coeffs_.size());
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        ints.push_back(c.num() * (lcm_den / c.den()));
        g = gcd(g, ints.back());
    }
    if (ints.back() < 0) g = -g;
    for (auto& v : ints) v /= g;
    return ints;
}

std::string Polynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (!unit || k == 0) os << mag;
        if (k >= 1) os << 'x';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

}  // namespace carrychain
