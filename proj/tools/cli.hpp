#pragma once

#include <ostream>

namespace qtchar::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kInconsistent = 3 };

/// Runs the command line `argv` (argv[0] is the program name), writing the
/// result to `out` and diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qtchar::cli
