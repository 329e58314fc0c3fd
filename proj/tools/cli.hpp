#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bihyper::cli {

enum ExitCode : int {
  kOk = 0,
  kRefuted = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bihyper::cli
