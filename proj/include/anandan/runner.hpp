#pragma once

#include <string>

#include "anandan/config.hpp"

namespace anandan {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitNumericalFailure = 2,
  kExitSingularity = 3,
};

struct RunOutput {
  std::string document;     // JSON object or CSV table, LF line endings
  std::string diagnostics;  // human-readable, for stderr
  int exit_code = kExitOk;
};

/// Executes spec.command. Engine errors are mapped to exit codes and reported in
/// diagnostics; a partial document is still produced where one makes sense
/// (interrupted trajectories, failed checks).
RunOutput run(const RunSpec& spec);

}  // namespace anandan
