#pragma once

// Eigenvector matrix of the carries chain and exact checks of V P = D V.

#include "carrychain/carries.hpp"
#include "carrychain/matrix.hpp"
#include "carrychain/rational.hpp"
#include "carrychain/verification.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace carrychain {

/// m x m matrix (v_{i,j}(n)) for 0 <= i, j < m.
Matrix eigen_matrix(int n, const Rational& p, std::size_t m);

/// (1, base^-1, ..., base^-(m-1)) with the signed base.
std::vector<Rational> spectrum(const ChainSpec& spec);

struct ChainReport {
    ChainSpec spec;
    std::vector<std::int64_t> states;
    Rational p;
    Matrix transition;
    Matrix eigenvectors;
    std::vector<Rational> spectrum;
    std::vector<Rational> stationary;
    VerificationReport verdicts;

    bool verified() const { return verdicts.passed(); }
};

// Checks recorded, in order: row_stochastic, states_match, VP_equals_DV,
// V_nonsingular, pi_stationary, pi_normalized. Failures are recorded, never thrown.
ChainReport verify_diagonalization(const ChainSpec& spec);

// Same checks against a caller-supplied matrix, e.g. one read from disk.
ChainReport verify_diagonalization(const ChainSpec& spec, const TransitionMatrix& supplied);

/// P1 P2 == P2 P1. Throws std::invalid_argument unless both chains share n, p and m.
bool commutes(const ChainSpec& a, const ChainSpec& b);

/// For each candidate, whether det(P - lambda I) = 0.
std::vector<std::pair<Rational, bool>> spectrum_probe(const Matrix& p, const std::vector<Rational>& candidates);

}  // namespace carrychain
