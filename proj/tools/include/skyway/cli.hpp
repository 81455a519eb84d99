#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace skyway::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMissionFailed = 1,  // infeasible payload or aborted mission
  kInvalidInput = 2,
};

/// Entry point for `skyway <plan|run|compare|gen> ...`. `args` excludes the
/// program name. Normal output goes to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace skyway::cli
