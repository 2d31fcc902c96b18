#pragma once

#include "carrychain/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace carrychain {

/// A located disagreement between a predicted and a computed value.
struct Mismatch {
    std::string location;
    Rational expected;
    Rational actual;
};

/// Outcome of one named exact check. Only the first mismatch is kept, along
/// with the total count.
struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    bool passed = true;
    std::size_t mismatches = 0;
    std::optional<Mismatch> first_mismatch;
    std::string note;

    void record(std::string location, const Rational& expected, const Rational& actual);
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    CheckResult& add(std::string name);
    const CheckResult* find(const std::string& name) const;
};

}  // namespace carrychain
