#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rainbow/instance.hpp"

namespace rainbow {

struct SolverBudget {
  std::uint64_t node_limit = 1'000'000'000;
  /// Wall-clock seconds.
  double time_limit = 600.0;
  /// Stop as soon as a matching of this size is found.
  std::optional<std::size_t> target;

  /// Throws std::invalid_argument unless both limits are positive.
  void check() const;
};

enum class SolveReason { ProvedOptimal, TargetReached, BudgetExhausted };

std::string_view to_string(SolveReason reason);
std::optional<SolveReason> parse_solve_reason(std::string_view text);

struct SolveResult {
  RainbowMatching best;
  /// No larger rainbow matching exists.
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  SolveReason reason = SolveReason::BudgetExhausted;
};

/// Extends `start` to a maximal rainbow matching: unused colours in ascending
/// order, each taking its first disjoint pair in canonical order.
RainbowMatching greedy_extend(const Instance& instance, const RainbowMatching& start);

/// Depth-first branch-and-bound over colours 0..n-1. Each level tries the
/// colour's disjoint pairs in canonical order, then skipping the colour; a
/// branch is cut when current size + remaining colours <= best size.
SolveResult exact_max(const Instance& instance, const SolverBudget& budget = {});

/// All matchings obtained from maximal `m` by replacing one edge with a
/// c-coloured pair that touches it and avoids every other edge. Ordered by
/// replaced index, then pair.
std::vector<RainbowMatching> colour_switch(const Instance& instance, const RainbowMatching& m, Colour c);

enum class SteerOutcome { Reached, Unreachable, BudgetExhausted };

std::string_view to_string(SteerOutcome outcome);

struct SteerResult {
  SteerOutcome outcome = SteerOutcome::BudgetExhausted;
  std::optional<RainbowMatching> matching;
  /// Colour switches on the path from the input to `matching`.
  std::size_t moves = 0;
  std::uint64_t states_explored = 0;
};

/// Breadth-first search over colour switches for a maximal matching of the
/// same size whose unused colours all lie in `good`.
SteerResult steer_to_colour_set(const Instance& instance, const RainbowMatching& m, const ColourSet& good,
                                const SolverBudget& budget = {});

/// Looks for an edge e of `m` with two disjoint pairs from its endpoints to
/// unmatched vertices in two distinct unused colours, and if found returns
/// m with e replaced by them. `m` must be extension-maximal.
std::optional<RainbowMatching> horn_augment(const Instance& instance, const RainbowMatching& m);

/// Greedy start, then horn augmentations and breadth-first walks over
/// colour switches on the current size plateau until no improvement is
/// found or the budget runs out.
SolveResult local_search(const Instance& instance, const SolverBudget& budget = {});

}  // namespace rainbow
