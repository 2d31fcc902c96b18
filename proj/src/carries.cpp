#include "carrychain/carries.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace carrychain {

namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

std::int64_t to_int64(const mpz_class& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("carry value exceeds 64-bit range");
    return v.get_si();
}

// Number of (x_1..x_n, z) in {0..b-1}^{n+1} with x_1 + ... + z = total,
// i.e. sum_k (-1)^k C(n+1,k) C(n + total - b k, n).
mpz_class bounded_compositions(long total, long n, long b) {
    mpz_class count = 0;
    for (long k = 0; k <= n + 1 && total - b * k >= 0; ++k) {
        const mpz_class term = binomial(n + 1, k) * binomial(n + total - b * k, n);
        if (k % 2 == 0) count += term; else count -= term;
    }
    return count;
}

// Residue class mod |base| -> the digit in that class.
std::map<std::int64_t, std::int64_t> residue_table(std::int64_t base, std::span<const std::int64_t> digits) {
    const std::int64_t b = base < 0 ? -base : base;
    std::map<std::int64_t, std::int64_t> table;
    for (const auto d : digits) table.emplace(floor_mod(d, b), d);
    return table;
}

}  // namespace

ChainSpec::ChainSpec(NumerationSystem sys, int n) : system(sys), summands(n) {
    if (n < 1) throw std::invalid_argument("number of summands must be at least 1");
}

std::vector<std::int64_t> StateSpace::carries() const {
    std::vector<std::int64_t> out;
    for (auto c = min_carry; c <= max_carry; ++c) out.push_back(c);
    return out;
}

std::size_t TransitionMatrix::index_of(std::int64_t carry) const {
    const auto it = std::find(states.begin(), states.end(), carry);
    if (it == states.end()) throw std::out_of_range("carry " + std::to_string(carry) + " is not a state");
    return static_cast<std::size_t>(it - states.begin());
}

TransitionMatrix TransitionMatrix::reordered(std::span<const std::int64_t> order) const {
    if (order.size() != states.size()) throw std::invalid_argument("reordered: state count mismatch");
    std::vector<std::size_t> src;
    src.reserve(order.size());
    for (const auto c : order) src.push_back(index_of(c));
    TransitionMatrix out{{order.begin(), order.end()}, Matrix(order.size(), order.size())};
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) out.probabilities(i, j) = probabilities(src[i], src[j]);
    return out;
}

StateSpace state_space(const ChainSpec& spec) {
    const Rational l = spec.system.centroid();
    const Rational scale(spec.summands - 1);
    return {to_int64((scale * l).floor()), to_int64((scale * (l + Rational(1))).ceil())};
}

Rational p_param(const ChainSpec& spec) {
    const Rational x = Rational(spec.summands - 1) * spec.system.centroid();
    if (x.is_integer()) return Rational(1);
    return (spec.system.is_negative() ? x : -x).frac().reciprocal();
}

Rational transition_probability(const ChainSpec& spec, std::int64_t from, std::int64_t to) {
    const long n = spec.summands;
    const long b = spec.system.base_magnitude();
    const long d = spec.system.least_digit();
    // Shift every digit into {0..b-1}: the equation base*to + a = from + sum x
    // becomes a count of bounded compositions of `total` into n + 1 parts.
    const long total = spec.system.is_negative()
                           ? -b * to - from + b - 1 + d * (1 - n)
                           : b * (to + 1) - 1 - from - d * (n - 1);
    mpz_class bn;
    mpz_ui_pow_ui(bn.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(n));
    return Rational(bounded_compositions(total, n, b), bn);
}

TransitionMatrix transition_matrix(const ChainSpec& spec) {
    const StateSpace space = state_space(spec);
    const std::size_t m = space.size();
    const long n = spec.summands;
    const long b = spec.system.base_magnitude();
    const Rational p = p_param(spec);
    const bool negative = spec.system.is_negative();
    // (b - 1)/p resp. (b + 1)/p, with p = 1 standing for a full period.
    const Rational shift_q = Rational(negative ? b + 1 : b - 1) / p;
    if (!shift_q.is_integer()) throw std::logic_error("transition_matrix: non-integral shift");
    const long q = shift_q.num().get_si();

    mpz_class bn;
    mpz_ui_pow_ui(bn.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(n));
    const Rational inv_bn = Rational(mpz_class(1), bn);

    TransitionMatrix out;
    out.probabilities = Matrix(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        const auto offset = static_cast<std::int64_t>(k);
        out.states.push_back(negative ? space.max_carry - offset : space.min_carry + offset);
    }
    for (std::size_t row = 0; row < m; ++row) {
        const long i = static_cast<long>(row);
        for (std::size_t col = 0; col < m; ++col) {
            const long j = static_cast<long>(col);
            mpz_class count = 0;
            const long upper = negative ? n - j : j;
            for (long r = 0; r <= upper; ++r) {
                const long top = negative ? n + b * (n + 1 - j - r) - q - i : n + b * (j - r) + q - i;
                const mpz_class term = binomial(n + 1, r) * binomial(top, n);
                if (r % 2 == 0) count += term; else count -= term;
            }
            out.probabilities(row, col) = Rational(count) * inv_bn;
        }
    }
    return out;
}

void validate_digit_set(std::int64_t base, std::span<const std::int64_t> digits) {
    const std::int64_t b = base < 0 ? -base : base;
    if (b < 2) throw std::invalid_argument("base magnitude must be at least 2");
    if (std::find(digits.begin(), digits.end(), 0) == digits.end()) {
        throw std::invalid_argument("digit set must contain 0");
    }
    std::set<std::int64_t> residues;
    std::set<std::int64_t> seen;
    for (const auto d : digits) {
        if (!seen.insert(d).second) throw std::invalid_argument("digit " + std::to_string(d) + " repeated");
        if (!residues.insert(floor_mod(d, b)).second) {
            throw std::invalid_argument("digits collide modulo " + std::to_string(b));
        }
    }
    if (static_cast<std::int64_t>(residues.size()) != b) {
        throw std::invalid_argument("digit set must contain one digit from every residue class modulo " +
                                    std::to_string(b));
    }
}

TransitionMatrix transition_matrix_bruteforce(std::int64_t base, std::span<const std::int64_t> digits,
                                              int summands) {
    validate_digit_set(base, digits);
    if (summands < 1) throw std::invalid_argument("number of summands must be at least 1");

    // Distribution of x_1 + ... + x_n by repeated convolution of the digit indicator.
    const auto [lo_it, hi_it] = std::minmax_element(digits.begin(), digits.end());
    const std::int64_t lo = *lo_it;
    const std::int64_t width = *hi_it - lo;
    std::vector<mpz_class> sums{1};  // index k <-> value k + lo * terms
    for (int t = 0; t < summands; ++t) {
        std::vector<mpz_class> next(sums.size() + static_cast<std::size_t>(width));
        for (std::size_t k = 0; k < sums.size(); ++k) {
            if (sums[k] == 0) continue;
            for (const auto d : digits) next[k + static_cast<std::size_t>(d - lo)] += sums[k];
        }
        sums = std::move(next);
    }
    const std::int64_t sum_offset = lo * summands;

    const auto table = residue_table(base, digits);
    const std::int64_t b = base < 0 ? -base : base;
    std::int64_t max_digit = 0;
    for (const auto d : digits) max_digit = std::max(max_digit, d < 0 ? -d : d);
    const std::size_t cap = static_cast<std::size_t>(10 * (max_digit + b));

    std::map<std::int64_t, std::map<std::int64_t, mpz_class>> rows;
    std::deque<std::int64_t> frontier{0};
    rows[0];
    while (!frontier.empty()) {
        const std::int64_t c = frontier.front();
        frontier.pop_front();
        std::map<std::int64_t, mpz_class> row;
        for (std::size_t k = 0; k < sums.size(); ++k) {
            if (sums[k] == 0) continue;
            const std::int64_t total = c + static_cast<std::int64_t>(k) + sum_offset;
            const std::int64_t a = table.at(floor_mod(total, b));
            row[(total - a) / base] += sums[k];
        }
        for (const auto& [next, count] : row) {
            if (rows.emplace(next, std::map<std::int64_t, mpz_class>{}).second) {
                if (rows.size() > cap) {
                    throw std::runtime_error("reachable carry set exceeds " + std::to_string(cap) + " states");
                }
                frontier.push_back(next);
            }
        }
        rows[c] = std::move(row);
    }

    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), digits.size(), static_cast<unsigned long>(summands));
    TransitionMatrix out;
    for (const auto& entry : rows) out.states.push_back(entry.first);
    out.probabilities = Matrix(out.states.size(), out.states.size());
    std::size_t i = 0;
    for (const auto& [from, row] : rows) {
        for (const auto& [to, count] : row) out.probabilities(i, out.index_of(to)) = Rational(count, denom);
        ++i;
    }
    return out;
}

TransitionMatrix transition_matrix_enumerated(std::int64_t base, std::span<const std::int64_t> digits,
                                              int summands) {
    validate_digit_set(base, digits);
    const std::int64_t b = base < 0 ? -base : base;
    if (summands < 1 || summands > 3 || b > 5) {
        throw std::invalid_argument("enumeration oracle is limited to 1..3 summands and |base| <= 5");
    }
    const std::size_t size = digits.size();
    std::set<std::int64_t> states{0};
    std::map<std::int64_t, std::map<std::int64_t, long>> counts;
    std::deque<std::int64_t> frontier{0};
    while (!frontier.empty()) {
        const std::int64_t c = frontier.front();
        frontier.pop_front();
        std::vector<std::size_t> idx(static_cast<std::size_t>(summands), 0);
        for (;;) {
            std::int64_t total = c;
            for (const auto k : idx) total += digits[k];
            // Every a in D is tried; exactly one makes the division exact.
            for (const auto a : digits) {
                if (floor_mod(total - a, b) != 0) continue;
                const std::int64_t next = (total - a) / base;
                ++counts[c][next];
                if (states.insert(next).second) frontier.push_back(next);
            }
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == size) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
    }
    long denom = 1;
    for (int t = 0; t < summands; ++t) denom *= static_cast<long>(size);
    TransitionMatrix out{{states.begin(), states.end()}, Matrix(states.size(), states.size())};
    for (const auto& [from, row] : counts)
        for (const auto& [to, count] : row)
            out.probabilities(out.index_of(from), out.index_of(to)) = Rational(count, denom);
    return out;
}

NumerationSystem find_system(int summands, const Rational& p) {
    if (summands < 2) throw std::invalid_argument("find_system needs at least 2 summands");
    if (p < Rational(1)) throw std::invalid_argument("p must be at least 1");
    const mpz_class k = p.num();
    const mpz_class l = p.den();
    const mpz_class b = p == Rational(1) ? mpz_class(summands) : mpz_class((summands - 1) * k + 1);
    const mpz_class d = p == Rational(1) ? mpz_class(0) : mpz_class(-l);
    if (!b.fits_sint_p()) throw std::invalid_argument("resulting base does not fit in int");
    NumerationSystem sys(static_cast<int>(b.get_si()), static_cast<int>(d.get_si()));
    if (p_param(ChainSpec(sys, summands)) != p) {
        throw std::logic_error("find_system: constructed system has a different p");
    }
    return sys;
}

}  // namespace carrychain
