#include "carrychain/verification.hpp"

#include <algorithm>

namespace carrychain {

void CheckResult::record(std::string location, const Rational& expected, const Rational& actual) {
    passed = false;
    if (mismatches++ == 0) first_mismatch = Mismatch{std::move(location), expected, actual};
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult& VerificationReport::add(std::string name) {
    checks.push_back(CheckResult{std::move(name)});
    return checks.back();
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace carrychain
