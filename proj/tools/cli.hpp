#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shapeforge::cli {

/// Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Standard output is
/// written only when the command succeeds; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shapeforge::cli
