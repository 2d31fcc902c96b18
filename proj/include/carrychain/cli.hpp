#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carrychain::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

struct Options {
    /// ANSI emphasis in pretty output.
    bool color = false;
};

/// Runs the tool on `args` (without the program name). Documents go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Options opts = {});

}  // namespace carrychain::cli
