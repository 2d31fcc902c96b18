#pragma once

#include "carrychain/rational.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace carrychain {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// Canonical: no trailing zero coefficients, so the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);

    /// x - root
    static Polynomial linear_factor(const Rational& root);
    /// prod (x - r) over roots
    static Polynomial from_roots(std::span<const Rational> roots);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t k) const;
    Rational leading() const;

    Rational operator()(const Rational& x) const;

    Polynomial scaled(const Rational& factor) const;

    /// Quotient and remainder; throws std::domain_error on a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    /// Smallest integer multiple with coprime coefficients and positive leading
    /// coefficient, i.e. the polynomial with denominators cleared.
    std::vector<mpz_class> primitive_integer_coefficients() const;

    std::string str() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace carrychain
