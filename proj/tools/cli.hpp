#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amzeta::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInvalidArgument = 2,
  kResourceLimit = 3,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amzeta::cli
