#pragma once

/**
 * @file simulate.hpp
 * @brief Monte Carlo runs of the carries process.
 *
 * Digits are drawn from a seeded std::mt19937_64 by rejection sampling, so a
 * run is reproducible from (seed, generator) on every standard library.
 */

#include "carrychain/carries.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace carrychain {

struct SimConfig {
    std::int64_t base = 10;
    std::vector<std::int64_t> digits;
    int summands = 2;
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    std::uint64_t burn_in = 1000;

    /// Configuration for the consecutive digit set of `spec`.
    static SimConfig for_chain(const ChainSpec& spec, std::uint64_t steps, std::uint64_t seed,
                               std::uint64_t burn_in = 1000);
};

struct SimResult {
    std::string generator = "mt19937_64";
    std::uint64_t seed = 0;
    std::uint64_t steps = 0;
    std::uint64_t burn_in = 0;
    std::map<std::int64_t, std::uint64_t> counts;
    std::map<std::int64_t, double> empirical;
    /// Against the exact stationary law; present for consecutive digit sets.
    std::optional<double> tv_distance;
};

/// Uniform integer in [0, bound) without modulo bias. bound must be positive.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Runs `steps` transitions from C_0 = 0 and tallies the carries visited after
/// the first `burn_in`. Throws std::invalid_argument for an invalid digit set or
/// steps <= burn_in, and std::logic_error if a carry leaves the safety window.
SimResult run_chain(const SimConfig& cfg);

/// `chains` independent runs of `cfg` on worker threads. Chain i uses a seed
/// derived from (cfg.seed, i) by SplitMix64, so the outcome does not depend on
/// scheduling.
std::vector<SimResult> run_chains(const SimConfig& cfg, unsigned chains);

/// Pools counts of runs with the same configuration; the result carries the
/// first run's seed and summed step counts.
SimResult merge(const std::vector<SimResult>& runs, const SimConfig& cfg);

/// Half the L1 distance. Throws std::invalid_argument on a length mismatch.
double tv_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace carrychain
