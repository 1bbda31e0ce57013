#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrev {

/// Exit codes of the qrev command.
enum ExitCode : int {
    kExitOk = 0,
    kExitOther = 1,
    kExitParse = 2,
    kExitNumeric = 3,
    kExitNotConstructible = 4,
    kExitVerification = 5,
};

/// Runs the command line `args` (without the program name), writing the
/// JSON result to `out` (or to --out) and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qrev
