#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace arith::cli {

enum ExitCode : int {
  kSuccess = 0,    // success or feasible
  kNegative = 1,   // proven infeasible, invalid structure, or nothing found
  kUsage = 2,      // usage or domain error
};

/// Runs one command line (without the program name). The payload goes to
/// `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace arith::cli
