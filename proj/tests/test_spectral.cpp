#include "carrychain/linalg.hpp"
#include "carrychain/spectral.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace carrychain;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

ChainSpec chain(int b, int d, int n, BaseSign sign = BaseSign::positive) {
    return ChainSpec(NumerationSystem(b, d, sign), n);
}

}  // namespace

TEST_CASE("eigenvector matrices") {
    CHECK(eigen_matrix(2, q(2), 3) == Matrix{{q(1), q(6), q(1)}, {q(1), q(0), q(-1)}, {q(1), q(-2), q(1)}});
    CHECK(eigen_matrix(2, q(5, 3), 3) ==
          Matrix{{q(1), q(37, 9), q(4, 9)}, {q(1), q(-1, 3), q(-2, 3)}, {q(1), q(-2), q(1)}});
    CHECK(eigen_matrix(4, q(2), 5) == Matrix{{q(1), q(76), q(230), q(76), q(1)},
                                             {q(1), q(22), q(0), q(-22), q(-1)},
                                             {q(1), q(4), q(-10), q(4), q(1)},
                                             {q(1), q(-2), q(0), q(2), q(-1)},
                                             {q(1), q(-4), q(6), q(-4), q(1)}});
}

TEST_CASE("diagonalization examples") {
    const ChainReport a = verify_diagonalization(chain(3, -1, 2));
    CHECK(a.verified());
    CHECK(a.spectrum == std::vector<Rational>{q(1), q(1, 3), q(1, 9)});
    const ChainReport b = verify_diagonalization(chain(3, -1, 2, BaseSign::negative));
    CHECK(b.verified());
    CHECK(b.spectrum == std::vector<Rational>{q(1), q(-1, 3), q(1, 9)});
    const ChainReport c = verify_diagonalization(chain(7, -1, 4));
    CHECK(c.verified());
    CHECK(c.spectrum == std::vector<Rational>{q(1), q(1, 7), q(1, 49), q(1, 343), q(1, 2401)});
    for (const char* name : {"row_stochastic", "states_match", "VP_equals_DV", "V_nonsingular", "pi_stationary",
                             "pi_normalized"}) {
        REQUIRE(a.verdicts.find(name) != nullptr);
        CHECK(a.verdicts.find(name)->passed);
    }
}

TEST_CASE("diagonalization over the small grid") {
    for (int b = 2; b <= 7; ++b)
        for (const auto sign : {BaseSign::positive, BaseSign::negative})
            for (int d = -(b - 1); d <= 0; ++d)
                for (int n = 1; n <= 4; ++n) {
                    CAPTURE(b);
                    CAPTURE(d);
                    CAPTURE(n);
                    CHECK(verify_diagonalization(chain(b, d, n, sign)).verified());
                }
}

TEST_CASE("corrupted matrix is reported with a located diff") {
    const ChainSpec spec = chain(3, -1, 2);
    TransitionMatrix tm = transition_matrix(spec);
    tm.probabilities(1, 0) = q(2, 9);
    tm.probabilities(1, 1) = q(6, 9);
    const ChainReport r = verify_diagonalization(spec, tm);
    CHECK_FALSE(r.verified());
    CHECK(r.verdicts.find("row_stochastic")->passed);
    const CheckResult* vp = r.verdicts.find("VP_equals_DV");
    REQUIRE(vp != nullptr);
    CHECK_FALSE(vp->passed);
    REQUIRE(vp->first_mismatch.has_value());
    CHECK(vp->first_mismatch->location == "(0,0)");

    TransitionMatrix wrong_shape = transition_matrix(chain(5, -1, 3));
    const ChainReport s = verify_diagonalization(spec, wrong_shape);
    CHECK_FALSE(s.verified());
    CHECK_FALSE(s.verdicts.find("states_match")->passed);
}

TEST_CASE("eigenvalues depend only on b, n and p") {
    // Equal (b, n, p) but different d gives the same matrix.
    for (int b = 3; b <= 11; ++b)
        for (int n = 2; n <= 4; ++n)
            for (int d1 = -(b - 1); d1 <= 0; ++d1)
                for (int d2 = d1 + 1; d2 <= 0; ++d2) {
                    const ChainSpec s1 = chain(b, d1, n);
                    const ChainSpec s2 = chain(b, d2, n);
                    if (p_param(s1) != p_param(s2)) continue;
                    CHECK(transition_matrix(s1).probabilities == transition_matrix(s2).probabilities);
                }
}

TEST_CASE("commuting families") {
    CHECK(commutes(chain(3, -1, 2), chain(9, -4, 2)));
    CHECK(commutes(chain(5, -1, 3), chain(5, -1, 3)));
    CHECK(commutes(chain(11, -3, 3), chain(21, -6, 3)));
    CHECK_THROWS_AS(commutes(chain(3, -1, 2), chain(5, -1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(commutes(chain(3, -1, 2), chain(10, 0, 2)), std::invalid_argument);
}

TEST_CASE("spectrum probe") {
    const Matrix p = transition_matrix(chain(3, -1, 2)).probabilities;
    const auto probe = spectrum_probe(p, {q(1), q(1, 3), q(1, 9), q(1, 2)});
    CHECK(probe[0].second);
    CHECK(probe[1].second);
    CHECK(probe[2].second);
    CHECK_FALSE(probe[3].second);
    const Matrix other = transition_matrix(chain(6, -3, 2, BaseSign::negative)).probabilities;
    CHECK(spectrum_probe(other, {q(1)})[0].second);
}

TEST_CASE("dividing out the predicted spectrum leaves a constant") {
    for (int b = 2; b <= 8; ++b)
        for (const auto sign : {BaseSign::positive, BaseSign::negative})
            for (int d = -(b - 1); d <= 0; d += 2)
                for (int n = 1; n <= 5; ++n) {
                    const ChainSpec spec = chain(b, d, n, sign);
                    Polynomial f = char_poly(transition_matrix(spec).probabilities);
                    for (const auto& lambda : spectrum(spec)) {
                        const auto [quot, rem] = f.divmod(Polynomial::linear_factor(lambda));
                        CHECK(rem.is_zero());
                        f = quot;
                    }
                    CHECK(f.degree() == 0);
                }
}
