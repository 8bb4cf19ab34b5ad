#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hott::cli {

enum ExitStatus : int { kOk = 0, kDiagnostics = 1, kUsage = 2, kInternal = 3 };

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hott::cli
