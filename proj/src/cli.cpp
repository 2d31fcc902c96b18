#include "carrychain/cli.hpp"

#include "carrychain/eulerian.hpp"
#include "carrychain/json_io.hpp"
#include "carrychain/linalg.hpp"
#include "carrychain/uniformsum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace carrychain::cli {

namespace {

constexpr const char* kSchemaVersion = "1";

// Errors in user input; reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Rational parse_p(const std::string& text) {
    const Rational p = parse_rational("--p", text);
    if (p < Rational(1)) throw UsageError("--p must be at least 1");
    return p;
}

std::vector<std::int64_t> parse_digits(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--digits: bad entry \"" + item + "\"");
        }
    }
    if (out.empty()) throw UsageError("--digits is empty");
    return out;
}

NumerationSystem make_system(int base, int d, bool negative) {
    try {
        return NumerationSystem(base, d, negative ? BaseSign::negative : BaseSign::positive);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

ChainSpec make_spec(int base, int d, int n, bool negative) {
    if (n < 1) throw UsageError("--n must be at least 1");
    return ChainSpec(make_system(base, d, negative), n);
}

Json document(const std::string& command, Json inputs, Json payload) {
    return Json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"payload", std::move(payload)}};
}

// Plain-text rendering ----------------------------------------------------

std::string csv_cell(const Rational& r) { return r.str(); }

std::string heading(const std::string& text, const Options& opts) {
    return opts.color ? "\x1b[1m" + text + "\x1b[0m" : text;
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const auto& row : cells) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += std::string(width[c] - row[c].size(), ' ') + row[c];
        }
        out << line << '\n';
    }
}

void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
        out << '\n';
    }
}

std::vector<std::vector<std::string>> matrix_cells(const Matrix& m, const std::vector<std::int64_t>& states) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{""};
    for (const auto s : states) header.push_back(std::to_string(s));
    cells.push_back(header);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row{std::to_string(states[i])};
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(csv_cell(m(i, j)));
        cells.push_back(row);
    }
    return cells;
}

// Key/value fallback for documents without a natural table.
void print_flat(std::ostream& out, const Json& j, const std::string& prefix, bool csv) {
    if (j.is_object() && j.contains("num") && j.contains("den") && j.size() == 2) {
        const std::string den = j["den"].get<std::string>();
        const std::string text = den == "1" ? j["num"].get<std::string>() : j["num"].get<std::string>() + "/" + den;
        out << prefix << (csv ? "," : ": ") << text << '\n';
    } else if (j.is_object()) {
        for (const auto& [k, v] : j.items()) print_flat(out, v, prefix.empty() ? k : prefix + "." + k, csv);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) print_flat(out, j[i], prefix + "[" + std::to_string(i) + "]", csv);
    } else {
        out << prefix << (csv ? "," : ": ") << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

void emit(std::ostream& out, const std::string& format, const Json& doc,
          const std::vector<std::vector<std::string>>& table, const std::string& title, const Options& opts) {
    if (format == "json") {
        out << doc.dump(2) << '\n';
    } else if (format == "csv") {
        if (table.empty()) print_flat(out, doc["payload"], "", true); else print_csv(out, table);
    } else {
        out << heading(title, opts) << '\n';
        if (table.empty()) print_flat(out, doc["payload"], "", false); else print_table(out, table);
    }
}

// Subcommands -------------------------------------------------------------

struct TriangleArgs {
    std::string p;
    int n_max = 0;
};

struct MatrixArgs {
    int base = 0;
    int d = 0;
    int n = 0;
    bool negative = false;
    std::string digits;
    bool char_poly = false;
};

struct VerifyArgs {
    int base = 0;
    int d = 0;
    int n = 0;
    bool negative = false;
    std::string matrix_file;
};

struct FindArgs {
    std::string p;
    int n = 0;
};

struct SimArgs {
    int base = 0;
    int d = 0;
    int n = 0;
    bool negative = false;
    std::string digits;
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    std::uint64_t burn_in = 1000;
};

struct SumArgs {
    std::string p;
    int n = 0;
};

int cmd_triangle(const TriangleArgs& a, const std::string& format, std::ostream& out, const Options& opts) {
    const Rational p = parse_p(a.p);
    if (a.n_max < 0) throw UsageError("--n-max must be non-negative");
    const EulerianTriangle tri = triangle_recurrence(a.n_max, p);
    Json rows = Json::array();
    std::vector<Rational> sums;
    std::vector<std::vector<std::string>> table;
    for (std::size_t n = 0; n < tri.rows.size(); ++n) {
        rows.push_back(to_json(tri.rows[n]));
        Rational sum;
        std::vector<std::string> line{std::to_string(n)};
        for (const auto& x : tri.rows[n]) {
            sum += x;
            line.push_back(csv_cell(x));
        }
        sums.push_back(sum);
        table.push_back(line);
    }
    const Json doc = document("triangle", Json{{"p", p.str()}, {"n_max", a.n_max}, {"format", format}},
                              Json{{"p", to_json(p)}, {"rows", rows}, {"row_sums", to_json(sums)}});
    emit(out, format, doc, table, "E_p(n, k) for p = " + p.str(), opts);
    return ok;
}

int cmd_matrix(const MatrixArgs& a, const std::string& format, std::ostream& out, const Options& opts) {
    if (a.n < 1) throw UsageError("--n must be at least 1");
    Json inputs{{"base", a.base}, {"n", a.n}, {"negative", a.negative}};
    Json payload;
    TransitionMatrix tm;
    if (!a.digits.empty()) {
        const auto digits = parse_digits(a.digits);
        inputs["digits"] = digits;
        const std::int64_t signed_base = a.negative ? -a.base : a.base;
        try {
            tm = transition_matrix_bruteforce(signed_base, digits, a.n);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        payload["path"] = "bruteforce";
    } else {
        inputs["d"] = a.d;
        const ChainSpec spec = make_spec(a.base, a.d, a.n, a.negative);
        tm = transition_matrix(spec);
        payload["path"] = "formula";
        payload["p"] = to_json(p_param(spec));
    }
    inputs["char_poly"] = a.char_poly;
    inputs["format"] = format;
    payload["states"] = tm.states;
    payload["matrix"] = to_json(tm.probabilities);
    if (a.char_poly) payload["char_poly"] = to_json(char_poly(tm.probabilities));
    const Json doc = document("matrix", inputs, payload);
    emit(out, format, doc, matrix_cells(tm.probabilities, tm.states), "transition matrix", opts);
    if (a.char_poly && format == "pretty") out << "char poly: " << char_poly(tm.probabilities).str() << '\n';
    return ok;
}

int cmd_verify(const VerifyArgs& a, const std::string& format, std::ostream& out, std::ostream& err,
               const Options& opts) {
    const ChainSpec spec = make_spec(a.base, a.d, a.n, a.negative);
    Json inputs{{"base", a.base}, {"d", a.d}, {"n", a.n}, {"negative", a.negative}};
    ChainReport report = [&] {
        if (a.matrix_file.empty()) return verify_diagonalization(spec);
        inputs["matrix"] = a.matrix_file;
        std::ifstream in(a.matrix_file);
        if (!in) throw UsageError("cannot read " + a.matrix_file);
        try {
            return verify_diagonalization(spec, transition_from_json(Json::parse(in)));
        } catch (const Json::exception& e) {
            throw UsageError(a.matrix_file + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw UsageError(a.matrix_file + ": " + e.what());
        } catch (const std::domain_error& e) {
            throw UsageError(a.matrix_file + ": " + e.what());
        }
    }();
    inputs["format"] = format;
    const Json doc = document("verify", inputs, to_json(report));
    std::vector<std::vector<std::string>> table{{"check", "result", "first mismatch"}};
    for (const auto& c : report.verdicts.checks) {
        std::string detail;
        if (c.first_mismatch) {
            detail = c.first_mismatch->location + ": expected " + c.first_mismatch->expected.str() + ", got " +
                     c.first_mismatch->actual.str();
        }
        table.push_back({c.name, c.passed ? "pass" : "FAIL", detail});
    }
    emit(out, format, doc, format == "json" ? decltype(table){} : table, "diagonalization checks", opts);
    if (!report.verified()) {
        for (const auto& c : report.verdicts.checks) {
            if (c.passed) continue;
            err << "check " << c.name << " failed";
            if (c.first_mismatch) {
                err << " at " << c.first_mismatch->location << ": expected " << c.first_mismatch->expected
                    << ", got " << c.first_mismatch->actual;
            }
            err << '\n';
        }
        return verification_failed;
    }
    return ok;
}

int cmd_find_system(const FindArgs& a, const std::string& format, std::ostream& out, const Options& opts) {
    const Rational p = parse_p(a.p);
    if (a.n < 2) throw UsageError("--n must be at least 2");
    const NumerationSystem sys = find_system(a.n, p);
    const Rational check = p_param(ChainSpec(sys, a.n));
    const Json doc = document("find-system", Json{{"p", p.str()}, {"n", a.n}, {"format", format}},
                              Json{{"base", sys.base_magnitude()},
                                   {"d", sys.least_digit()},
                                   {"digits", sys.digits()},
                                   {"p", to_json(check)},
                                   {"verified", check == p}});
    emit(out, format, doc, {}, "numeration system", opts);
    return check == p ? ok : verification_failed;
}

int cmd_simulate(const SimArgs& a, const std::string& format, std::ostream& out, const Options& opts) {
    if (a.n < 1) throw UsageError("--n must be at least 1");
    if (a.steps == 0) throw UsageError("--steps must be positive");
    if (a.steps <= a.burn_in) throw UsageError("--steps must exceed --burn-in");
    Json inputs{{"base", a.base}, {"n", a.n}, {"negative", a.negative}};
    SimConfig cfg;
    if (!a.digits.empty()) {
        cfg.base = a.negative ? -a.base : a.base;
        cfg.digits = parse_digits(a.digits);
        cfg.summands = a.n;
        inputs["digits"] = cfg.digits;
        try {
            validate_digit_set(cfg.base, cfg.digits);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else {
        inputs["d"] = a.d;
        cfg = SimConfig::for_chain(make_spec(a.base, a.d, a.n, a.negative), 0, 0);
    }
    cfg.steps = a.steps;
    cfg.seed = a.seed;
    cfg.burn_in = a.burn_in;
    inputs["steps"] = a.steps;
    inputs["seed"] = a.seed;
    inputs["burn_in"] = a.burn_in;
    inputs["format"] = format;
    const SimResult result = run_chain(cfg);
    const Json doc = document("simulate", inputs, to_json(result));
    std::vector<std::vector<std::string>> table{{"carry", "count", "frequency"}};
    for (const auto& [carry, count] : result.counts) {
        std::ostringstream f;
        f << std::setprecision(6) << std::fixed << result.empirical.at(carry);
        table.push_back({std::to_string(carry), std::to_string(count), f.str()});
    }
    emit(out, format, doc, format == "json" ? decltype(table){} : table, "carry occupancy", opts);
    if (format == "pretty" && result.tv_distance) out << "tv distance: " << *result.tv_distance << '\n';
    return ok;
}

int cmd_uniform_sum(const SumArgs& a, const std::string& format, std::ostream& out, const Options& opts) {
    const Rational p = parse_p(a.p);
    if (a.n < 1) throw UsageError("--n must be at least 1");
    const auto probs = interval_probs(a.n, p);
    const Rational norm = pow(p, a.n) * Rational(factorial(static_cast<unsigned long>(a.n)));
    std::vector<Rational> row;
    std::vector<Rational> normalized;
    bool matches = true;
    std::vector<std::vector<std::string>> table{{"k", "probability", "E_p(n,k)"}};
    for (int k = 0; k <= a.n; ++k) {
        row.push_back(eulerian(a.n, p, k));
        normalized.push_back(row.back() / norm);
        matches = matches && normalized.back() == probs[static_cast<std::size_t>(k)];
        table.push_back({std::to_string(k), csv_cell(probs[static_cast<std::size_t>(k)]), csv_cell(row.back())});
    }
    const Json doc = document("uniform-sum", Json{{"p", p.str()}, {"n", a.n}, {"format", format}},
                              Json{{"probabilities", to_json(probs)},
                                   {"eulerian_row", to_json(row)},
                                   {"normalizer", to_json(norm)},
                                   {"matches", matches}});
    emit(out, format, doc, table, "Pr(S_n in 1/p + [k-1, k])", opts);
    return matches ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Options opts) {
    CLI::App app{"Exact carries chains, generalized Eulerian numbers and related checks", "carrychain"};
    app.require_subcommand(1);
    std::string format = "json";
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"pretty", "csv", "json"}));
    };

    TriangleArgs tri;
    auto* triangle = app.add_subcommand("triangle", "Rows of the generalized Eulerian triangle");
    triangle->add_option("--p", tri.p, "Parameter p = K/L >= 1")->required();
    triangle->add_option("--n-max", tri.n_max, "Last row")->required();
    add_format(triangle);

    MatrixArgs mat;
    auto* matrix = app.add_subcommand("matrix", "Transition matrix of the carries chain");
    matrix->add_option("--base", mat.base, "Base magnitude b")->required();
    auto* d_opt = matrix->add_option("--d", mat.d, "Least digit of the consecutive digit set");
    auto* digits_opt = matrix->add_option("--digits", mat.digits, "Explicit digit set, e.g. \"-1,0,4\"");
    d_opt->excludes(digits_opt);
    matrix->add_option("--n", mat.n, "Number of summands")->required();
    matrix->add_flag("--negative", mat.negative, "Use base -b");
    matrix->add_flag("--char-poly", mat.char_poly, "Also emit the characteristic polynomial");
    add_format(matrix);

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Exact diagonalization checks");
    verify->add_option("--base", ver.base, "Base magnitude b")->required();
    verify->add_option("--d", ver.d, "Least digit")->required();
    verify->add_option("--n", ver.n, "Number of summands")->required();
    verify->add_flag("--negative", ver.negative, "Use base -b");
    verify->add_option("--matrix", ver.matrix_file, "Check this JSON matrix instead of the computed one");
    add_format(verify);

    FindArgs fs;
    auto* find = app.add_subcommand("find-system", "A numeration system with a given p");
    find->add_option("--p", fs.p, "Parameter p = K/L >= 1")->required();
    find->add_option("--n", fs.n, "Number of summands")->required();
    add_format(find);

    SimArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo run of the carries process");
    simulate->add_option("--base", sim.base, "Base magnitude b")->required();
    auto* sd_opt = simulate->add_option("--d", sim.d, "Least digit");
    auto* sdigits_opt = simulate->add_option("--digits", sim.digits, "Explicit digit set");
    sd_opt->excludes(sdigits_opt);
    simulate->add_option("--n", sim.n, "Number of summands")->required();
    simulate->add_option("--steps", sim.steps, "Transitions to run")->required();
    simulate->add_option("--seed", sim.seed, "Generator seed")->required();
    simulate->add_option("--burn-in", sim.burn_in, "Transitions discarded before tallying");
    simulate->add_flag("--negative", sim.negative, "Use base -b");
    add_format(simulate);

    SumArgs us;
    auto* usum = app.add_subcommand("uniform-sum", "Interval masses of a sum of uniform variables");
    usum->add_option("--p", us.p, "Parameter p = K/L >= 1")->required();
    usum->add_option("--n", us.n, "Number of summands")->required();
    add_format(usum);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*triangle) return cmd_triangle(tri, format, out, opts);
        if (*matrix) {
            if (d_opt->count() == 0 && mat.digits.empty()) throw UsageError("matrix needs --d or --digits");
            return cmd_matrix(mat, format, out, opts);
        }
        if (*verify) return cmd_verify(ver, format, out, err, opts);
        if (*find) return cmd_find_system(fs, format, out, opts);
        if (*simulate) {
            if (sd_opt->count() == 0 && sim.digits.empty()) throw UsageError("simulate needs --d or --digits");
            return cmd_simulate(sim, format, out, opts);
        }
        if (*usum) return cmd_uniform_sum(us, format, out, opts);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return verification_failed;
    }
    return usage_error;
}

}  // namespace carrychain::cli
