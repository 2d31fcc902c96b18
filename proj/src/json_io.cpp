#include "carrychain/json_io.hpp"

#include <stdexcept>

namespace carrychain {

Json to_json(const Rational& r) {
    return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

Json to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = m.row(i);
        out.push_back(to_json(std::vector<Rational>(row.begin(), row.end())));
    }
    return out;
}

Json to_json(const Polynomial& poly) {
    Json integer = Json::array();
    for (const auto& c : poly.primitive_integer_coefficients()) integer.push_back(c.get_str());
    return Json{{"ascending", to_json(poly.coefficients())},
                {"integer_ascending", integer},
                {"text", poly.str()}};
}

Json to_json(const VerificationReport& report) {
    Json out = Json::array();
    for (const auto& c : report.checks) {
        Json entry{{"name", c.name}, {"passed", c.passed}, {"mismatches", c.mismatches}};
        if (c.first_mismatch) {
            entry["first_mismatch"] = Json{{"location", c.first_mismatch->location},
                                           {"expected", to_json(c.first_mismatch->expected)},
                                           {"actual", to_json(c.first_mismatch->actual)}};
        } else {
            entry["first_mismatch"] = nullptr;
        }
        if (!c.note.empty()) entry["note"] = c.note;
        out.push_back(std::move(entry));
    }
    return out;
}

Json to_json(const ChainReport& report) {
    return Json{{"verified", report.verified()},
                {"states", report.states},
                {"p", to_json(report.p)},
                {"spectrum", to_json(report.spectrum)},
                {"stationary", to_json(report.stationary)},
                {"transition", to_json(report.transition)},
                {"eigenvectors", to_json(report.eigenvectors)},
                {"checks", to_json(report.verdicts)}};
}

Json to_json(const SimResult& result) {
    Json visits = Json::array();
    for (const auto& [carry, count] : result.counts) {
        visits.push_back(Json{{"carry", carry}, {"count", count}, {"frequency", result.empirical.at(carry)}});
    }
    Json out{{"generator", result.generator},
             {"seed", result.seed},
             {"steps", result.steps},
             {"burn_in", result.burn_in},
             {"visits", visits}};
    out["tv_distance"] = result.tv_distance ? Json(*result.tv_distance) : Json(nullptr);
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_object() && j.contains("num") && j.contains("den") && j["num"].is_string() && j["den"].is_string()) {
        const mpz_class num(j["num"].get<std::string>());
        const mpz_class den(j["den"].get<std::string>());
        return Rational(num, den);
    }
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw std::invalid_argument("not a rational: " + j.dump());
}

TransitionMatrix transition_from_json(const Json& j) {
    const Json& body = j.contains("payload") ? j["payload"] : j;
    if (!body.contains("states") || !body.contains("matrix")) {
        throw std::invalid_argument("expected \"states\" and \"matrix\" fields");
    }
    TransitionMatrix out;
    for (const auto& s : body["states"]) {
        if (!s.is_number_integer()) throw std::invalid_argument("states must be integers");
        out.states.push_back(s.get<std::int64_t>());
    }
    const Json& rows = body["matrix"];
    if (!rows.is_array() || rows.size() != out.states.size()) {
        throw std::invalid_argument("matrix must have one row per state");
    }
    out.probabilities = Matrix(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
        for (std::size_t k = 0; k < rows.size(); ++k) out.probabilities(i, k) = rational_from_json(rows[i][k]);
    }
    return out;
}

}  // namespace carrychain
