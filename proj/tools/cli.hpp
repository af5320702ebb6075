#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qkoh::cli {

/// Exit codes of the qkoh command line.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDisagreement = 2,
};

/// Runs the command line with `args` (excluding the program name) and returns
/// the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qkoh::cli
