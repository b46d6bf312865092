#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vacfluct::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumeric = 2, kVerification = 3 };

// The whole tool.  args[0] is the program name.  Reports go to `out`,
// diagnostics to `err`; with --error-json a failure is also described as a
// JSON object on `out`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace vacfluct::cli
