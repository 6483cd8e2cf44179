#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atomix {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitResource = 3,
  kExitMismatch = 4,
};

/// Runs one `atomix` invocation. `args` excludes the program name. Reports go
/// to `out`, diagnostics to `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atomix
