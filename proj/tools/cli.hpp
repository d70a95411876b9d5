#pragma once

#include <ostream>

namespace charlier::cli {

enum ExitCode : int {
  kOk = 0,
  kToleranceFailure = 1,
  kInvalidInput = 2,
  kSingular = 3,
};

/// Full command line front end. Machine output goes to `out` (or --out),
/// diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace charlier::cli
