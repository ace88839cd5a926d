#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace infoclust::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kSolverError = 3,
  kOracleMismatch = 4,
};

/// Runs one command. `args` excludes the program name. The document goes
/// to `out`, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace infoclust::cli
