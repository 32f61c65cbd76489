#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gste {

enum ExitCode : int {
  kExitSatisfied = 0,
  kExitRefuted = 1,
  kExitError = 2,
};

/// Runs the command line `gste <args...>` (args exclude the program name).
/// Reports go to `out`, diagnostics and usage errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gste
