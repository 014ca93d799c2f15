#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treecount::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kMethodUnavailable = 3,
  kOracleTooLarge = 4,
  kIoError = 5,
};

/// Runs the treecount command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace treecount::cli
