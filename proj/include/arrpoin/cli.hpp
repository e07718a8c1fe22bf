#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrpoin::cli {

enum ExitCode : int {
    Success = 0,
    VerificationMismatch = 1,
    InputFailure = 2,
    InternalFailure = 3,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace arrpoin::cli
