#pragma once

#include <iosfwd>

namespace elhgeo::cli {

enum ExitCode : int {
  kHolds = 0,
  kDoesNotHold = 1,
  kUsage = 2,
  kInternal = 3,
};

/// Runs the command line `argv` (argv[0] is the program name). Documents go
/// to `out`, diagnostics to `err`; "-" as a file name reads `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace elhgeo::cli
