#include "carrychain/numeration.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace carrychain;

namespace {

DigitString digits(std::initializer_list<int> d) { return DigitString{d}; }

}  // namespace

TEST_CASE("system construction") {
    CHECK_NOTHROW(NumerationSystem(3, -1));
    CHECK_THROWS_AS(NumerationSystem(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(NumerationSystem(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(NumerationSystem(3, -3), std::invalid_argument);
    const NumerationSystem sys(3, -1);
    CHECK(sys.greatest_digit() == 1);
    CHECK(sys.digits() == std::vector<std::int64_t>{-1, 0, 1});
    CHECK(sys.centroid() == Rational(-1, 2));
    CHECK(NumerationSystem(3, -1, BaseSign::negative).centroid() == Rational(-1, 2));
    CHECK(NumerationSystem(3, -1, BaseSign::negative).signed_base() == -3);
}

TEST_CASE("expand examples") {
    const NumerationSystem pos(3, -1);
    const NumerationSystem neg(3, -1, BaseSign::negative);
    CHECK(expand(pos, 2) == digits({-1, 1}));
    CHECK(expand(neg, 2) == digits({-1, -1}));
    CHECK(expand(pos, 0) == digits({0}));
    CHECK(expand(neg, 0) == digits({0}));
    CHECK(expand(NumerationSystem(10, 0), 0) == digits({0}));
    CHECK(expand(NumerationSystem(10, 0), 407) == digits({7, 0, 4}));
}

TEST_CASE("evaluate examples") {
    CHECK(evaluate(NumerationSystem(3, -1), digits({-1, 1})) == 2);
    CHECK(evaluate(NumerationSystem(3, -1), digits({0})) == 0);
    CHECK(evaluate(NumerationSystem(3, -1, BaseSign::negative), digits({-1, -1})) == 2);
    CHECK_THROWS_AS(evaluate(NumerationSystem(3, -1), digits({2})), std::invalid_argument);
}

TEST_CASE("representable classes") {
    CHECK(representable_class(NumerationSystem(10, 0)) == RepresentableClass::non_negatives);
    CHECK(representable_class(NumerationSystem(10, -9)) == RepresentableClass::non_positives);
    CHECK(representable_class(NumerationSystem(3, -1)) == RepresentableClass::all_integers);
    CHECK(representable_class(NumerationSystem(10, 0, BaseSign::negative)) == RepresentableClass::all_integers);
    CHECK_THROWS_AS(expand(NumerationSystem(10, 0), -1), std::domain_error);
    CHECK_THROWS_AS(expand(NumerationSystem(10, -9), 1), std::domain_error);
}

TEST_CASE("round trip, digit range and injectivity on a window") {
    for (int b = 2; b <= 7; ++b) {
        for (const auto sign : {BaseSign::positive, BaseSign::negative}) {
            for (int d = -(b - 1); d <= 0; ++d) {
                const NumerationSystem sys(b, d, sign);
                const auto cls = representable_class(sys);
                std::set<std::vector<int>> seen;
                for (std::int64_t x = -2000; x <= 2000; ++x) {
                    if (cls == RepresentableClass::non_negatives && x < 0) continue;
                    if (cls == RepresentableClass::non_positives && x > 0) continue;
                    const DigitString s = expand(sys, x);
                    CHECK(evaluate(sys, s) == x);
                    for (const int digit : s.digits) CHECK(sys.contains(digit));
                    if (s.digits.size() > 1) CHECK(s.digits.back() != 0);
                    CHECK(seen.insert(s.digits).second);
                }
            }
        }
    }
}

TEST_CASE("large values round trip") {
    const NumerationSystem sys(3, -1, BaseSign::negative);
    for (const std::int64_t x : {INT64_C(123456789012345), INT64_C(-987654321098765)}) {
        CHECK(evaluate(sys, expand(sys, x)) == x);
    }
}
