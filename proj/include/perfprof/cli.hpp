#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perfprof::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,  // dataset failed validation, or nothing left to plot
  kUsage = 2,    // bad flags, unknown names, unreadable/unwritable files
};

/// Runs one command line. `args[0]` is the program name. "-" as input or
/// output path means `in` / `out`; diagnostics always go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace perfprof::cli
