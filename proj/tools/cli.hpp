#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kripkelab::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kPositive = 0,       // valid / equivalent / forced
  kCountermodel = 1,   // countermodel or mismatch produced
  kInputError = 2,     // malformed formula, file, or flags
  kInconclusive = 3,   // bounded search found nothing, or a precondition failed
};

/// Runs the tool on `args` (without the program name).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kripkelab::cli
