#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/generators.hpp"
#include "rainbow/instance.hpp"
#include "rainbow/solvers.hpp"

namespace rainbow {

/// A trial where exact_max did not reach size n.
struct StressFailure {
  std::size_t trial = 0;
  /// "random" or "extremal".
  std::string kind;
  /// Generator spec; seed is the per-trial seed.
  RandomSpec spec;
  std::uint64_t master_seed = 0;
  Instance instance;
  SolveResult certificate;
};

struct StressReport {
  std::size_t n = 0;
  std::size_t v = 0;
  std::size_t max_multiplicity = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  /// Ordered by trial index.
  std::vector<StressFailure> failures;
};

struct StressOptions {
  std::size_t jobs = 1;
  /// Each failure is written here as failure-<trial>.json before returning.
  std::optional<std::filesystem::path> replay_dir;
  /// Prepend gen_triangle_extremal(n) as trial 0.
  bool include_extremal = false;
  SolverBudget budget{};
};

/// The RandomSpec of random trial `index` (0-based, extremal not counted).
RandomSpec stress_trial_spec(std::size_t n, std::size_t v, std::size_t max_multiplicity, std::uint64_t seed,
                             std::size_t index);

/// Runs exact_max with target n on seeded random (n, v)-instances. The
/// report is identical for every job count.
StressReport stress_conjecture(std::size_t n, std::size_t v, std::size_t trials, std::size_t max_multiplicity,
                               std::uint64_t seed, const StressOptions& options = {});

}  // namespace rainbow
