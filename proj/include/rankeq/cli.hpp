#pragma once
#include <iosfwd>
#include <span>
#include <string>

namespace rankeq::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kInputError = 2 };

/// Runs one `gini`, `lorenz` or `minimize` command. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rankeq::cli
