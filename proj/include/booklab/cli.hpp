#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace booklab {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalid = 2,
  kExitResourceLimit = 3,
  kExitIo = 4,
};

/// Runs the booklab command line. args excludes the program name. JSON
/// goes to out, diagnostics to err; `--input -` reads from in.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace booklab
