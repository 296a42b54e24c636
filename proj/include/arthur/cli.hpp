#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arthur::cli {

/// Exit codes: the verdict channel of every decision subcommand.
enum ExitCode : int {
  kTrue = 0,
  kFalse = 1,
  kUsage = 2,
  kHypothesis = 3,
  kDisagreement = 4,  // ext --decider both found the deciders disagreeing
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arthur::cli
