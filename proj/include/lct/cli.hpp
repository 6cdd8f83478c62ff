#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lct::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kValidationFailure = 2,
  kResourceLimit = 3,
};

/// Runs one command line (without the program name), writing records to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lct::cli
