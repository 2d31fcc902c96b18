#pragma once

#include "carrychain/rational.hpp"

#include <cstdint>
#include <vector>

namespace carrychain {

enum class BaseSign { positive, negative };

enum class RepresentableClass { all_integers, non_negatives, non_positives };

/// Positional numeration system with base +b or -b and the consecutive digit
/// set {d, ..., d + b - 1}, which must contain 0.
class NumerationSystem {
public:
    /// Throws std::invalid_argument unless b >= 2 and d <= 0 <= d + b - 1.
    NumerationSystem(int base_magnitude, int least_digit, BaseSign sign = BaseSign::positive);

    int base_magnitude() const { return base_; }
    int least_digit() const { return least_; }
    int greatest_digit() const { return least_ + base_ - 1; }
    BaseSign sign() const { return sign_; }
    bool is_negative() const { return sign_ == BaseSign::negative; }
    /// +b or -b.
    std::int64_t signed_base() const { return is_negative() ? -base_ : base_; }

    bool contains(std::int64_t digit) const { return digit >= least_ && digit <= greatest_digit(); }
    std::vector<std::int64_t> digits() const;

    /// Digit-set centroid parameter l: d/(b-1) for base b, (-d-b)/(b+1) for base -b.
    Rational centroid() const;

    friend bool operator==(const NumerationSystem&, const NumerationSystem&) = default;

private:
    int base_;
    int least_;
    BaseSign sign_;
};

/// Digits of an expansion, least significant first.
struct DigitString {
    std::vector<int> digits;
    friend bool operator==(const DigitString&, const DigitString&) = default;
};

RepresentableClass representable_class(const NumerationSystem& sys);

/// Greedy expansion: the last digit is the unique element of D congruent to x
/// mod b, then recurse on (x - digit) / base.
/// Throws std::domain_error if x is not representable in `sys`, and
/// std::logic_error if the iteration cap 64 + ceil(log_b |x|) is exceeded.
DigitString expand(const NumerationSystem& sys, std::int64_t x);

/// Horner evaluation with the signed base. Throws std::invalid_argument for a
/// digit outside D and std::overflow_error if the value leaves int64.
std::int64_t evaluate(const NumerationSystem& sys, const DigitString& s);

}  // namespace carrychain
