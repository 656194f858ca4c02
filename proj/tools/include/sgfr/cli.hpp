#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgfr::cli {

enum ExitCode : int { kOk = 0, kComputationError = 1, kUsageError = 2 };

// Runs one `sgfr` invocation. `args` excludes the program name. Results go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgfr::cli
