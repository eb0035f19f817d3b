#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crepant::cli {

/// Exit codes: 0 success, 1 usage error, 2 validation error, 3 pole.
enum ExitCode { kOk = 0, kUsage = 1, kValidation = 2, kPole = 3 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crepant::cli
