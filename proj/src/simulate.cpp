#include "carrychain/simulate.hpp"

#include "carrychain/eulerian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

namespace carrychain {

namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// The consecutive system behind `cfg`, if its digits form one.
std::optional<NumerationSystem> consecutive_system(const SimConfig& cfg) {
    const std::int64_t b = cfg.base < 0 ? -cfg.base : cfg.base;
    if (static_cast<std::int64_t>(cfg.digits.size()) != b) return std::nullopt;
    const auto [lo, hi] = std::minmax_element(cfg.digits.begin(), cfg.digits.end());
    if (*hi - *lo != b - 1) return std::nullopt;
    return NumerationSystem(static_cast<int>(b), static_cast<int>(*lo),
                            cfg.base < 0 ? BaseSign::negative : BaseSign::positive);
}

void fill_empirical(SimResult& r) {
    std::uint64_t total = 0;
    for (const auto& [c, k] : r.counts) total += k;
    r.empirical.clear();
    for (const auto& [c, k] : r.counts) r.empirical[c] = static_cast<double>(k) / static_cast<double>(total);
}

void attach_tv(SimResult& r, const SimConfig& cfg) {
    const auto sys = consecutive_system(cfg);
    if (!sys) return;
    const ChainSpec spec(*sys, cfg.summands);
    const auto states = transition_matrix(spec).states;
    const auto pi = stationary(cfg.summands, p_param(spec));
    std::vector<double> exact;
    std::vector<double> seen;
    for (std::size_t k = 0; k < states.size(); ++k) {
        exact.push_back(k < pi.size() ? pi[k].to_double() : 0.0);
        const auto it = r.empirical.find(states[k]);
        seen.push_back(it == r.empirical.end() ? 0.0 : it->second);
    }
    // Mass outside the predicted states counts in full.
    for (const auto& [c, f] : r.empirical) {
        if (std::find(states.begin(), states.end(), c) == states.end()) {
            exact.push_back(0.0);
            seen.push_back(f);
        }
    }
    r.tv_distance = tv_distance(exact, seen);
}

}  // namespace

SimConfig SimConfig::for_chain(const ChainSpec& spec, std::uint64_t steps, std::uint64_t seed,
                               std::uint64_t burn_in) {
    return {spec.system.signed_base(), spec.system.digits(), spec.summands, steps, seed, burn_in};
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
    // Reject the lowest 2^64 mod bound values so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

SimResult run_chain(const SimConfig& cfg) {
    validate_digit_set(cfg.base, cfg.digits);
    if (cfg.summands < 1) throw std::invalid_argument("number of summands must be at least 1");
    if (cfg.steps <= cfg.burn_in) throw std::invalid_argument("steps must exceed burn_in");

    const std::int64_t b = cfg.base < 0 ? -cfg.base : cfg.base;
    std::vector<std::int64_t> by_residue(static_cast<std::size_t>(b));
    std::int64_t max_digit = 0;
    for (const auto d : cfg.digits) {
        by_residue[static_cast<std::size_t>(floor_mod(d, b))] = d;
        max_digit = std::max(max_digit, d < 0 ? -d : d);
    }
    // Carries stay within n * max|digit| / (|b| - 1) of zero; ten times that is the window.
    const std::int64_t window = 10 * (cfg.summands * max_digit / (b - 1) + 1);

    std::mt19937_64 rng(cfg.seed);
    const auto size = static_cast<std::uint64_t>(cfg.digits.size());
    SimResult r;
    r.seed = cfg.seed;
    r.steps = cfg.steps;
    r.burn_in = cfg.burn_in;
    std::int64_t carry = 0;
    for (std::uint64_t step = 1; step <= cfg.steps; ++step) {
        std::int64_t total = carry;
        for (int k = 0; k < cfg.summands; ++k) total += cfg.digits[uniform_below(rng, size)];
        const std::int64_t a = by_residue[static_cast<std::size_t>(floor_mod(total, b))];
        carry = (total - a) / cfg.base;
        if (carry > window || carry < -window) {
            throw std::logic_error("carry " + std::to_string(carry) + " left the safety window");
        }
        if (step > cfg.burn_in) ++r.counts[carry];
    }
    fill_empirical(r);
    attach_tv(r, cfg);
    return r;
}

std::vector<SimResult> run_chains(const SimConfig& cfg, unsigned chains) {
    std::vector<SimResult> out(chains);
    std::vector<std::exception_ptr> errors(chains);
    std::vector<std::thread> workers;
    for (unsigned i = 0; i < chains; ++i) {
        workers.emplace_back([&, i] {
            try {
                SimConfig local = cfg;
                local.seed = splitmix64(cfg.seed + i);
                out[i] = run_chain(local);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

SimResult merge(const std::vector<SimResult>& runs, const SimConfig& cfg) {
    SimResult r;
    if (runs.empty()) return r;
    r.seed = runs.front().seed;
    r.burn_in = runs.front().burn_in;
    for (const auto& run : runs) {
        r.steps += run.steps;
        for (const auto& [c, k] : run.counts) r.counts[c] += k;
    }
    fill_empirical(r);
    attach_tv(r, cfg);
    return r;
}

double tv_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("tv_distance: length mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::fabs(a[i] - b[i]);
    return sum / 2.0;
}

}  // namespace carrychain
