#include "carrychain/spectral.hpp"

#include "carrychain/eulerian.hpp"
#include "carrychain/linalg.hpp"

#include <stdexcept>
#include <string>

namespace carrychain {

namespace {

std::string cell(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Matrix eigen_matrix(int n, const Rational& p, std::size_t m) {
    Matrix v(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) v(i, j) = v_closed(n, p, static_cast<int>(i), static_cast<int>(j));
    return v;
}

std::vector<Rational> spectrum(const ChainSpec& spec) {
    const std::size_t m = state_space(spec).size();
    const Rational step = Rational(spec.system.signed_base()).reciprocal();
    std::vector<Rational> out;
    Rational value(1);
    for (std::size_t i = 0; i < m; ++i) {
        out.push_back(value);
        value *= step;
    }
    return out;
}

ChainReport verify_diagonalization(const ChainSpec& spec) {
    return verify_diagonalization(spec, transition_matrix(spec));
}

ChainReport verify_diagonalization(const ChainSpec& spec, const TransitionMatrix& supplied) {
    const std::size_t m = state_space(spec).size();
    const Rational p = p_param(spec);
    ChainReport report{spec,
                       supplied.states,
                       p,
                       supplied.probabilities,
                       eigen_matrix(spec.summands, p, m),
                       spectrum(spec),
                       stationary(spec.summands, p),
                       {}};
    auto& verdicts = report.verdicts.checks;
    const Matrix& pm = report.transition;

    CheckResult stochastic{"row_stochastic"};
    for (std::size_t i = 0; i < pm.rows(); ++i) {
        Rational sum;
        for (std::size_t j = 0; j < pm.cols(); ++j) {
            if (pm(i, j).sign() < 0) stochastic.record("entry " + cell(i, j), Rational(0), pm(i, j));
            sum += pm(i, j);
        }
        if (sum != Rational(1)) stochastic.record("row " + std::to_string(i), Rational(1), sum);
    }
    verdicts.push_back(stochastic);

    CheckResult states{"states_match"};
    const std::vector<std::int64_t> predicted = transition_matrix(spec).states;
    if (supplied.states != predicted || !pm.is_square() || pm.rows() != m) {
        states.record("state count", Rational(m), Rational(pm.rows()));
        states.note = "supplied matrix does not match the predicted state space";
    }
    verdicts.push_back(states);
    if (!states.passed) {
        for (const char* name : {"VP_equals_DV", "V_nonsingular", "pi_stationary"}) {
            CheckResult skipped{name};
            skipped.passed = false;
            skipped.note = "skipped: shape mismatch";
            verdicts.push_back(skipped);
        }
    } else {
        CheckResult vp{"VP_equals_DV"};
        const Matrix lhs = report.eigenvectors * pm;
        const Matrix rhs = Matrix::diagonal(report.spectrum) * report.eigenvectors;
        for (const auto& d : diff(rhs, lhs)) vp.record(cell(d.row, d.col), d.expected, d.actual);
        verdicts.push_back(vp);

        CheckResult nonsingular{"V_nonsingular"};
        const Rational det = determinant(report.eigenvectors);
        if (det.is_zero()) nonsingular.record("det(V)", Rational(1), det);
        nonsingular.note = "det(V) = " + det.str();
        verdicts.push_back(nonsingular);

        CheckResult fixed{"pi_stationary"};
        const auto moved = pm.left_multiply(report.stationary);
        for (std::size_t j = 0; j < m; ++j)
            if (moved[j] != report.stationary[j]) fixed.record("pi[" + std::to_string(j) + "]", report.stationary[j], moved[j]);
        verdicts.push_back(fixed);
    }

    CheckResult normalized{"pi_normalized"};
    Rational total;
    for (const auto& x : report.stationary) total += x;
    if (total != Rational(1)) normalized.record("sum", Rational(1), total);
    verdicts.push_back(normalized);
    return report;
}

bool commutes(const ChainSpec& a, const ChainSpec& b) {
    if (a.summands != b.summands || p_param(a) != p_param(b) || state_space(a).size() != state_space(b).size()) {
        throw std::invalid_argument("commutes: chains must share n, p and the state-space size");
    }
    const Matrix pa = transition_matrix(a).probabilities;
    const Matrix pb = transition_matrix(b).probabilities;
    return pa * pb == pb * pa;
}

std::vector<std::pair<Rational, bool>> spectrum_probe(const Matrix& p, const std::vector<Rational>& candidates) {
    if (!p.is_square()) throw std::invalid_argument("spectrum_probe needs a square matrix");
    std::vector<std::pair<Rational, bool>> out;
    for (const auto& lambda : candidates) {
        out.emplace_back(lambda, determinant(p - Matrix::identity(p.rows()).scaled(lambda)).is_zero());
    }
    return out;
}

}  // namespace carrychain
