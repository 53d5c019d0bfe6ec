#pragma once

#include <string>
#include <vector>

namespace chordcubic::cli {

struct CommandResult {
  int exit_code = 0;
  std::string out;  // JSON (or text) for standard output
  std::string err;  // diagnostics for standard error
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitRejected = 2;

/// Parses and runs one invocation; args excludes the program name. Never
/// throws: rejected input comes back as exit 2 with a JSON diagnostic.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace chordcubic::cli
