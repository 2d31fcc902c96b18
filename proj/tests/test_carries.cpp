#include "carrychain/carries.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace carrychain;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

Matrix scaled_ints(std::initializer_list<std::initializer_list<int>> rows, std::int64_t den) {
    Matrix m(rows.size(), rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const int v : row) m(i, j++) = q(v, den);
        ++i;
    }
    return m;
}

ChainSpec chain(int b, int d, int n, BaseSign sign = BaseSign::positive) {
    return ChainSpec(NumerationSystem(b, d, sign), n);
}

// Absolute-carry transitions rearranged into the state order of `tm`.
Matrix from_absolute(const ChainSpec& spec, const TransitionMatrix& tm) {
    Matrix m(tm.states.size(), tm.states.size());
    for (std::size_t i = 0; i < tm.states.size(); ++i)
        for (std::size_t j = 0; j < tm.states.size(); ++j)
            m(i, j) = transition_probability(spec, tm.states[i], tm.states[j]);
    return m;
}

}  // namespace

TEST_CASE("state spaces") {
    const StateSpace a = state_space(chain(3, -1, 2));
    CHECK(a.min_carry == -1);
    CHECK(a.max_carry == 1);
    CHECK(a.size() == 3);
    const StateSpace b = state_space(chain(10, 0, 4));
    CHECK(b.min_carry == 0);
    CHECK(b.max_carry == 3);
    CHECK(b.size() == 4);
    const StateSpace c = state_space(chain(3, -1, 2, BaseSign::negative));
    CHECK(c.min_carry == -1);
    CHECK(c.max_carry == 1);
    CHECK(c.size() == 3);
    CHECK_THROWS_AS(chain(3, -1, 0), std::invalid_argument);
}

TEST_CASE("parameter p") {
    CHECK(p_param(chain(3, -1, 2)) == q(2));
    CHECK(p_param(chain(6, -3, 2)) == q(5, 3));
    for (int n = 1; n <= 6; ++n) CHECK(p_param(chain(10, 0, n)) == q(1));
}

TEST_CASE("p = 1 exactly when the state space has n states") {
    for (int b = 2; b <= 9; ++b)
        for (const auto sign : {BaseSign::positive, BaseSign::negative})
            for (int d = -(b - 1); d <= 0; ++d)
                for (int n = 2; n <= 6; ++n) {
                    const ChainSpec spec = chain(b, d, n, sign);
                    const Rational p = p_param(spec);
                    CHECK(p >= q(1));
                    CHECK((p == q(1)) == (state_space(spec).size() == static_cast<std::size_t>(n)));
                    if (p != q(1)) CHECK(state_space(spec).size() == static_cast<std::size_t>(n + 1));
                }
}

TEST_CASE("closed-form matrices") {
    CHECK(transition_matrix(chain(3, -1, 2)).probabilities ==
          scaled_ints({{3, 6, 0}, {1, 7, 1}, {0, 6, 3}}, 9));
    CHECK(transition_matrix(chain(5, -1, 3)).probabilities ==
          scaled_ints({{10, 80, 35, 0}, {4, 68, 52, 1}, {1, 52, 68, 4}, {0, 35, 80, 10}}, 125));
    CHECK(transition_matrix(chain(6, -3, 2)).probabilities ==
          scaled_ints({{10, 25, 1}, {6, 27, 3}, {3, 27, 6}}, 36));
    CHECK(transition_matrix(chain(3, -1, 2)).states == std::vector<std::int64_t>{-1, 0, 1});
    CHECK(transition_matrix(chain(3, -1, 2, BaseSign::negative)).states == std::vector<std::int64_t>{1, 0, -1});
}

TEST_CASE("closed form matches the absolute-carry formula") {
    for (int b = 2; b <= 8; ++b)
        for (const auto sign : {BaseSign::positive, BaseSign::negative})
            for (int d = -(b - 1); d <= 0; ++d)
                for (int n = 1; n <= 4; ++n) {
                    const ChainSpec spec = chain(b, d, n, sign);
                    const TransitionMatrix tm = transition_matrix(spec);
                    CHECK(tm.probabilities == from_absolute(spec, tm));
                }
}

TEST_CASE("brute force examples") {
    const std::vector<std::int64_t> balanced{-1, 0, 1};
    const TransitionMatrix bf = transition_matrix_bruteforce(3, balanced, 2);
    CHECK(bf.states == std::vector<std::int64_t>{-1, 0, 1});
    CHECK(bf.probabilities == transition_matrix(chain(3, -1, 2)).probabilities);

    const std::vector<std::int64_t> decimal{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    const TransitionMatrix dec = transition_matrix_bruteforce(10, decimal, 2);
    CHECK(dec.states == std::vector<std::int64_t>{0, 1});
    CHECK(dec.probabilities == scaled_ints({{55, 45}, {45, 55}}, 100));
}

TEST_CASE("brute force rejects bad digit sets") {
    const std::vector<std::int64_t> no_zero{1, 2, 3};
    const std::vector<std::int64_t> collision{-1, 0, 2};
    const std::vector<std::int64_t> short_set{0, 1};
    const std::vector<std::int64_t> repeated{0, 0, 1};
    CHECK_THROWS_AS(transition_matrix_bruteforce(3, no_zero, 2), std::invalid_argument);
    CHECK_THROWS_AS(transition_matrix_bruteforce(3, collision, 2), std::invalid_argument);
    CHECK_THROWS_AS(transition_matrix_bruteforce(3, short_set, 2), std::invalid_argument);
    CHECK_THROWS_AS(transition_matrix_bruteforce(3, repeated, 2), std::invalid_argument);
    CHECK_THROWS_AS(transition_matrix_bruteforce(1, std::vector<std::int64_t>{0}, 2), std::invalid_argument);
}

TEST_CASE("non-consecutive digit set") {
    const std::vector<std::int64_t> digits{-1, 0, 4};
    const TransitionMatrix bf = transition_matrix_bruteforce(3, digits, 2);
    const TransitionMatrix en = transition_matrix_enumerated(3, digits, 2);
    CHECK(bf.states == en.states);
    CHECK(bf.probabilities == en.probabilities);
    CHECK(bf.states == std::vector<std::int64_t>{-2, -1, 0, 1, 2, 3, 4});
    for (std::size_t i = 0; i < bf.states.size(); ++i) {
        Rational sum;
        for (std::size_t j = 0; j < bf.states.size(); ++j) sum += bf.probabilities(i, j);
        CHECK(sum == q(1));
    }
}

TEST_CASE("formula, brute force and enumeration agree") {
    for (int b = 2; b <= 8; ++b)
        for (const auto sign : {BaseSign::positive, BaseSign::negative})
            for (int d = -(b - 1); d <= 0; ++d)
                for (int n = 1; n <= 4; ++n) {
                    const ChainSpec spec = chain(b, d, n, sign);
                    const TransitionMatrix formula = transition_matrix(spec);
                    const auto digits = spec.system.digits();
                    const TransitionMatrix bf = transition_matrix_bruteforce(spec.system.signed_base(), digits, n);
                    CAPTURE(b);
                    CAPTURE(d);
                    CAPTURE(n);
                    REQUIRE(bf.states.size() == state_space(spec).size());
                    CHECK(bf.reordered(formula.states).probabilities == formula.probabilities);
                    if (n <= 3 && b <= 5) {
                        const TransitionMatrix en =
                            transition_matrix_enumerated(spec.system.signed_base(), digits, n);
                        CHECK(en.states == bf.states);
                        CHECK(en.probabilities == bf.probabilities);
                    }
                }
}

TEST_CASE("entries are probabilities with denominators dividing b^n") {
    for (int b = 2; b <= 11; ++b)
        for (const auto sign : {BaseSign::positive, BaseSign::negative})
            for (int d = -(b - 1); d <= 0; ++d)
                for (int n = 1; n <= 5; ++n) {
                    const ChainSpec spec = chain(b, d, n, sign);
                    const Matrix p = transition_matrix(spec).probabilities;
                    mpz_class bn;
                    mpz_ui_pow_ui(bn.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(n));
                    for (std::size_t i = 0; i < p.rows(); ++i) {
                        Rational sum;
                        for (std::size_t j = 0; j < p.cols(); ++j) {
                            CHECK(p(i, j) >= q(0));
                            CHECK(p(i, j) <= q(1));
                            CHECK(bn % p(i, j).den() == 0);
                            sum += p(i, j);
                        }
                        CHECK(sum == q(1));
                    }
                }
}

TEST_CASE("reordering and state lookup") {
    const TransitionMatrix tm = transition_matrix(chain(3, -1, 2));
    const std::vector<std::int64_t> order{1, 0, -1};
    const TransitionMatrix r = tm.reordered(order);
    CHECK(r.probabilities(0, 0) == tm.probabilities(2, 2));
    CHECK(r.probabilities(0, 2) == tm.probabilities(2, 0));
    CHECK_THROWS_AS(tm.index_of(5), std::out_of_range);
    CHECK_THROWS_AS(tm.reordered(std::vector<std::int64_t>{0, 1}), std::invalid_argument);
}

TEST_CASE("find_system") {
    CHECK(find_system(3, q(5, 3)) == NumerationSystem(11, -3));
    CHECK(find_system(2, q(2)) == NumerationSystem(3, -1));
    CHECK(find_system(4, q(2)) == NumerationSystem(7, -1));
    CHECK(find_system(4, q(5, 3)) == NumerationSystem(16, -3));
    CHECK(find_system(5, q(1)) == NumerationSystem(5, 0));
    CHECK_THROWS_AS(find_system(1, q(2)), std::invalid_argument);
    CHECK_THROWS_AS(find_system(3, q(1, 2)), std::invalid_argument);
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= 7; ++k)
            for (int l = 1; l <= k; ++l) {
                const Rational p = q(k, l);
                CHECK(p_param(ChainSpec(find_system(n, p), n)) == p);
            }
}
