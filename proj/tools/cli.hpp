#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace vecinv::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

// Runs one command line (without the program name) and returns the exit
// status. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vecinv::cli
