#pragma once

/**
 * @file carries.hpp
 * @brief Transition matrices of the n-summand carries chain.
 *
 * Adding n random numbers digit by digit in a numeration system produces a
 * carry sequence C_0 = 0, C_{k+1} = (C_k + X_1 + ... + X_n - A_k) / base,
 * where the X are i.i.d. uniform digits and A_k is the digit congruent to the
 * column total. This header builds its transition matrix two ways: from the
 * alternating-binomial closed form (consecutive digit sets only) and by
 * direct counting over an arbitrary digit set.
 */

#include "carrychain/matrix.hpp"
#include "carrychain/numeration.hpp"
#include "carrychain/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace carrychain {

struct ChainSpec {
    /// Throws std::invalid_argument when summands < 1.
    ChainSpec(NumerationSystem system, int summands);

    NumerationSystem system;
    int summands;
};

/// Carry range {min_carry, ..., max_carry}.
struct StateSpace {
    std::int64_t min_carry = 0;
    std::int64_t max_carry = 0;

    std::size_t size() const { return static_cast<std::size_t>(max_carry - min_carry + 1); }
    std::vector<std::int64_t> carries() const;
};

/// A 0-based transition matrix with the carry value of every index attached.
struct TransitionMatrix {
    std::vector<std::int64_t> states;
    Matrix probabilities;

    /// Throws std::out_of_range for a carry that is not a state.
    std::size_t index_of(std::int64_t carry) const;
    /// Same chain with indices permuted into `order` (a permutation of states).
    TransitionMatrix reordered(std::span<const std::int64_t> order) const;
};

StateSpace state_space(const ChainSpec& spec);

/// The triangle parameter p >= 1 of the chain: 1 when (n-1)l is an integer,
/// otherwise 1/{(n-1)(-l)} for base b and 1/{(n-1)l} for base -b.
Rational p_param(const ChainSpec& spec);

/// Pr(C_{k+1} = to | C_k = from) for absolute carry values, by the
/// alternating-binomial count of solutions of base*to + a = from + x_1 + ... + x_n.
Rational transition_probability(const ChainSpec& spec, std::int64_t from, std::int64_t to);

/// Closed-form matrix in shifted indices. It depends on (b, n, p) only.
/// Base b: index k is carry s + k. Base -b: index k is carry t - k, the
/// orientation in which V P V^{-1} is diagonal.
TransitionMatrix transition_matrix(const ChainSpec& spec);

/// Definition-level oracle for an arbitrary digit set containing 0 that is a
/// complete residue system mod |base|. States are the carries reachable from 0,
/// ascending. Throws std::invalid_argument for an invalid digit set and
/// std::runtime_error if the reachable set exceeds 10 * (max|digit| + |base|).
TransitionMatrix transition_matrix_bruteforce(std::int64_t base, std::span<const std::int64_t> digits,
                                              int summands);

/// Naive tuple enumeration over D^n x D; second-tier oracle restricted to
/// summands <= 3 and |base| <= 5 (std::invalid_argument otherwise).
TransitionMatrix transition_matrix_enumerated(std::int64_t base, std::span<const std::int64_t> digits,
                                              int summands);

/// Throws std::invalid_argument unless `digits` contains 0, has no repeats and
/// hits every residue class mod |base| exactly once.
void validate_digit_set(std::int64_t base, std::span<const std::int64_t> digits);

/// A positive-base system whose n-carry chain has parameter p = K/L:
/// b = (n-1)K + 1, d = -L, or the classical b = n, d = 0 when p = 1.
/// Throws std::invalid_argument for n < 2 or p < 1.
NumerationSystem find_system(int summands, const Rational& p);

}  // namespace carrychain
