#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bigyro::cli {

/// Process exit codes.
enum ExitCode : int {
  kPass = 0,
  kPropertyFailed = 1,  // a verified mathematical property does not hold
  kUsage = 2,           // malformed input or bad flags
};

/// Runs `bigyro` with `args` (program name excluded). JSON results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bigyro::cli
