#pragma once

#include <string>
#include <vector>

#include "cli/matrix_io.hpp"

namespace latkern::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kInputError = 2, kInternalError = 3 };

struct CommandResult {
  int exit_code = kSuccess;
  Json report;             // {"command", "status", "exit_code", "result" | "error"}
  bool json_output = false;
  std::string help;        // set when --help was requested

  /// What the executable prints on stdout.
  [[nodiscard]] std::string rendered() const;
};

/// Runs one invocation; args excludes the program name. Never throws.
CommandResult run(const std::vector<std::string>& args);

/// LATKERN_HORIZON, or 40 when unset. Throws PreconditionError when set
/// to something other than a nonnegative integer.
long verification_horizon();

}  // namespace latkern::cli
