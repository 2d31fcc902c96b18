#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars.
 *
 * Values are always kept in lowest terms with a positive denominator, and
 * zero is stored as 0/1. Arbitrary precision comes from GMP.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace carrychain {

class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    template <std::unsigned_integral T>
    Rational(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

    Rational(const mpz_class& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    /// Throws std::domain_error when `den` is zero.
    Rational(std::int64_t num, std::int64_t den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "K", "-K" or "K/L" (optional surrounding whitespace).
    /// Throws std::invalid_argument on malformed text, std::domain_error on L = 0.
    static Rational parse(std::string_view text);

    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    mpz_class floor() const;
    mpz_class ceil() const;
    /// x - floor(x), always in [0, 1).
    Rational frac() const;
    Rational abs() const;
    /// Throws std::domain_error for zero.
    Rational reciprocal() const;

    double to_double() const { return value_.get_d(); }

    /// "num/den", or just "num" when the denominator is 1.
    std::string str() const;

    /// Integer power; negative exponents require a nonzero base.
    friend Rational pow(const Rational& base, long exponent);

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error when `rhs` is zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    explicit Rational(mpq_class q) : value_(std::move(q)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact binomial coefficient; zero unless 0 <= k <= n.
mpz_class binomial(long n, long k);
mpz_class factorial(unsigned long n);

}  // namespace carrychain
