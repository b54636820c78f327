#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rainbow::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  /// Bad input, bad flags, or a violated audit.
  kError = 1,
  /// A conjecture counterexample candidate was found.
  kCounterexample = 2,
  kBudgetExhausted = 3,
};

/// Runs `rainbow <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbow::cli
