#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toricvol::cli {

/// Exit codes: 0 success, 1 I/O or validation error, 2 a verified bound is violated.
enum ExitCode : int { kOk = 0, kError = 1, kViolation = 2 };

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricvol::cli
