#ifndef SECMAT_TOOLS_CLI_HPP
#define SECMAT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace secmat::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kSemanticError = 3,
  kGenericityError = 4,
  kInvariantViolation = 5,
};

/// Runs the command line `secmat <args...>` and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secmat::cli

#endif  // SECMAT_TOOLS_CLI_HPP
