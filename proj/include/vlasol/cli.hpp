#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vlasol {

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitBlowup = 2, kExitIo = 3 };

/// Command-line entry point. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vlasol
