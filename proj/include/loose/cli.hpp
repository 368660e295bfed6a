#pragma once

#include <iosfwd>

namespace loose {

// Exit codes of the command-line front end.
enum ExitCode : int {
  exit_ok = 0,
  exit_precondition = 2,
  exit_work_bound = 3,
  exit_verification = 4,
};

// Runs one command line. Normal output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace loose
