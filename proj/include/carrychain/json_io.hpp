#pragma once

// JSON encodings shared by the command-line tool and its tests. Rationals are
// {"num": "<decimal>", "den": "<decimal>"} so no precision is lost.

#include "carrychain/carries.hpp"
#include "carrychain/polynomial.hpp"
#include "carrychain/simulate.hpp"
#include "carrychain/spectral.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace carrychain {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& v);
Json to_json(const Matrix& m);
Json to_json(const Polynomial& poly);
Json to_json(const VerificationReport& report);
Json to_json(const ChainReport& report);
Json to_json(const SimResult& result);

/// Accepts {"num", "den"} objects, "K/L" strings and plain integers.
/// Throws std::invalid_argument for anything else.
Rational rational_from_json(const Json& j);

/// Reads {"states": [...], "matrix": [[...]]}, or a whole document whose
/// "payload" has that shape. Throws std::invalid_argument on malformed input.
TransitionMatrix transition_from_json(const Json& j);

}  // namespace carrychain
