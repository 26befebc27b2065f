#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mustshe::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kUsageError = 2,
  kIoError = 3,
};

/// Runs one subcommand. `args` excludes the program name. Results go to the
/// requested sink (`out` when no --output is given), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mustshe::cli
