#include "carrychain/eulerian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace carrychain {

namespace {

std::string index_label(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

Rational v_closed(int n, const Rational& p, int i, int j) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (i < 0 || i > n || j < -1 || j > n + 1) {
        throw std::out_of_range("v_closed: index " + index_label(i, j) + " out of range for n = " +
                                std::to_string(n));
    }
    Rational sum;
    for (int r = 0; r <= j; ++r) {
        Rational term = Rational(binomial(n + 1, r)) * pow(p * Rational(j - r) + Rational(1), n - i);
        if (r % 2 == 0) sum += term; else sum -= term;
    }
    return sum;
}

Rational eulerian(int n, const Rational& p, int k) { return v_closed(n, p, 0, k); }

EulerianArray eulerian_array(int n, const Rational& p) {
    EulerianArray out{n, p, {}};
    out.values.resize(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n + 1; ++j) out.values[static_cast<std::size_t>(i)].push_back(v_closed(n, p, i, j));
    return out;
}

EulerianTriangle triangle_recurrence(int n_max, const Rational& p) {
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    EulerianTriangle tri{p, {{Rational(1)}}};
    for (int n = 0; n < n_max; ++n) {
        const auto& prev = tri.rows.back();
        auto at = [&](int k) { return k >= 0 && k <= n ? prev[static_cast<std::size_t>(k)] : Rational(); };
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(n + 2));
        for (int k = 0; k <= n + 1; ++k) {
            row.push_back((p * Rational(k) + Rational(1)) * at(k) +
                          (p * Rational(n + 2 - k) - Rational(1)) * at(k - 1));
        }
        tri.rows.push_back(std::move(row));
    }
    return tri;
}

VerificationReport array_recurrence_check(int n, const Rational& p) {
    if (n < 1) throw std::invalid_argument("recurrence check needs n >= 1");
    VerificationReport report;
    auto& check = report.add("recurrence");
    for (int i = 0; i <= n - 1; ++i) {
        for (int j = 0; j <= n; ++j) {
            const Rational lhs = v_closed(n, p, i, j);
            const Rational rhs = (p * Rational(n + 1 - j) - Rational(1)) * v_closed(n - 1, p, i, j - 1) +
                                 (p * Rational(j) + Rational(1)) * v_closed(n - 1, p, i, j);
            if (lhs != rhs) check.record(index_label(i, j), rhs, lhs);
        }
    }
    return report;
}

std::vector<Rational> row_sums(int n, const Rational& p) {
    std::vector<Rational> out;
    for (int i = 0; i <= n; ++i) {
        Rational sum;
        for (int j = 0; j <= n; ++j) sum += v_closed(n, p, i, j);
        out.push_back(sum);
    }
    return out;
}

VerificationReport unit_symmetry_check(int n) {
    if (n < 1) throw std::invalid_argument("symmetry check needs n >= 1");
    const Rational one(1);
    VerificationReport report;
    auto& check = report.add("unit_symmetry");
    for (int i = 0; i <= n - 1; ++i) {
        for (int j = 0; j <= n - 1; ++j) {
            const Rational expected = Rational(i % 2 == 0 ? 1 : -1) * v_closed(n, one, i, j);
            const Rational actual = v_closed(n, one, i, n - 1 - j);
            if (expected != actual) check.record(index_label(i, j), expected, actual);
        }
    }
    return report;
}

Rational dual_parameter(const Rational& p) {
    if (p <= Rational(1)) throw std::invalid_argument("dual parameter needs p > 1");
    return p / (p - Rational(1));
}

VerificationReport dual_symmetry_check(int n, const Rational& p) {
    if (n < 1) throw std::invalid_argument("symmetry check needs n >= 1");
    const Rational dual = dual_parameter(p);
    VerificationReport report;
    auto& check = report.add("dual_symmetry");
    for (int i = 0; i <= n; ++i) {
        const Rational factor = Rational(i % 2 == 0 ? 1 : -1) * pow(dual / p, n - i);
        for (int j = 0; j <= n; ++j) {
            const Rational expected = factor * v_closed(n, p, i, j);
            const Rational actual = v_closed(n, dual, i, n - j);
            if (expected != actual) check.record(index_label(i, j), expected, actual);
        }
    }
    return report;
}

VerificationReport symmetry_check(int n, const Rational& p) {
    if (p == Rational(1)) return unit_symmetry_check(n);
    return dual_symmetry_check(n, p);
}

std::vector<Rational> stationary(int n, const Rational& p) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (p < Rational(1)) throw std::invalid_argument("p must be at least 1");
    const int m = n == 0 ? 1 : (p == Rational(1) ? n : n + 1);
    const Rational norm = pow(p, n) * Rational(factorial(static_cast<unsigned long>(n)));
    std::vector<Rational> out;
    for (int j = 0; j < m; ++j) out.push_back(eulerian(n, p, j) / norm);
    return out;
}

double eulerian_approx(int n, double p, int k) {
    if (n < 0 || k < 0 || k > n + 1) throw std::out_of_range("eulerian_approx: index out of range");
    double sum = 0.0;
    for (int r = 0; r <= k; ++r) {
        const double term = binomial(n + 1, r).get_d() * std::pow(p * (k - r) + 1.0, n);
        sum += r % 2 == 0 ? term : -term;
    }
    return sum;
}

}  // namespace carrychain
