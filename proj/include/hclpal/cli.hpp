#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hclpal::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kIo = 3 };

/// Runs one invocation. args excludes the program name. Machine output goes
/// to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hclpal::cli
