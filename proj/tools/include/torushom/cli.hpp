#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace torushom::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kInternalContradiction = 3,
};

struct Environment {
  /// Default cache path when --cache is absent (normally $TORUSHOM_CACHE).
  std::optional<std::string> cache_path;
};

Environment environment_from_process();

/// Parses `args` (without the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace torushom::cli
