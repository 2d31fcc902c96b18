#include "carrychain/numeration.hpp"

#include <stdexcept>
#include <string>

namespace carrychain {

namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

int iteration_cap(std::int64_t x, int base) {
    int digits = 0;
    std::uint64_t mag = x < 0 ? -static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
    std::uint64_t pow = 1;
    while (pow < mag) {
        ++digits;
        if (pow > mag / static_cast<std::uint64_t>(base)) break;
        pow *= static_cast<std::uint64_t>(base);
    }
    return 64 + digits;
}

}  // namespace

NumerationSystem::NumerationSystem(int base_magnitude, int least_digit, BaseSign sign)
    : base_(base_magnitude), least_(least_digit), sign_(sign) {
    if (base_ < 2) throw std::invalid_argument("base magnitude must be at least 2");
    if (least_ > 0 || least_ + base_ - 1 < 0) {
        throw std::invalid_argument("digit set {" + std::to_string(least_) + ", ..., " +
                                    std::to_string(least_ + base_ - 1) + "} does not contain 0");
    }
}

std::vector<std::int64_t> NumerationSystem::digits() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(base_));
    for (int k = least_; k <= greatest_digit(); ++k) out.push_back(k);
    return out;
}

Rational NumerationSystem::centroid() const {
    if (is_negative()) return Rational(-least_ - base_, base_ + 1);
    return Rational(least_, base_ - 1);
}

RepresentableClass representable_class(const NumerationSystem& sys) {
    if (sys.is_negative()) return RepresentableClass::all_integers;
    if (sys.least_digit() == 0) return RepresentableClass::non_negatives;
    if (sys.least_digit() == -sys.base_magnitude() + 1) return RepresentableClass::non_positives;
    return RepresentableClass::all_integers;
}

DigitString expand(const NumerationSystem& sys, std::int64_t x) {
    const auto cls = representable_class(sys);
    if ((cls == RepresentableClass::non_negatives && x < 0) ||
        (cls == RepresentableClass::non_positives && x > 0)) {
        throw std::domain_error(std::to_string(x) + " is not representable with digits {" +
                                std::to_string(sys.least_digit()) + ", ..., " +
                                std::to_string(sys.greatest_digit()) + "}");
    }
    const std::int64_t b = sys.base_magnitude();
    const std::int64_t base = sys.signed_base();
    DigitString out;
    if (x == 0) {
        out.digits.push_back(0);
        return out;
    }
    const int cap = iteration_cap(x, sys.base_magnitude());
    std::int64_t rest = x;
    while (rest != 0) {
        if (static_cast<int>(out.digits.size()) >= cap) {
            throw std::logic_error("digit expansion of " + std::to_string(x) + " did not terminate");
        }
        const std::int64_t digit =
            sys.least_digit() + floor_mod(rest - sys.least_digit(), b);
        out.digits.push_back(static_cast<int>(digit));
        rest = (rest - digit) / base;
    }
    return out;
}

std::int64_t evaluate(const NumerationSystem& sys, const DigitString& s) {
    const std::int64_t base = sys.signed_base();
    std::int64_t acc = 0;
    for (auto it = s.digits.rbegin(); it != s.digits.rend(); ++it) {
        if (!sys.contains(*it)) {
            throw std::invalid_argument("digit " + std::to_string(*it) + " is outside the digit set");
        }
        if (__builtin_mul_overflow(acc, base, &acc) || __builtin_add_overflow(acc, *it, &acc)) {
            throw std::overflow_error("digit string value exceeds 64-bit range");
        }
    }
    return acc;
}

}  // namespace carrychain
