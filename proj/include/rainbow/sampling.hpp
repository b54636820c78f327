#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/instance.hpp"
#include "rainbow/solvers.hpp"

namespace rainbow {

/// 2 exp(-eps^2 E / (3 k^2)): bound on P(|X - E| > eps E) for a sum X of
/// independent [0, k]-valued terms with mean E. Throws std::invalid_argument
/// unless E >= 0, k > 0 and 0 < eps < 1.
double chernoff_bound(double expectation, double k, double eps);

/// 2 n^(-1/4), capped at 1.
double sampling_probability(std::size_t n);

struct ColourSample {
  /// Colour-c pairs with both endpoints in S.
  std::size_t e_c = 0;
  /// Vertices of the colour class inside S.
  std::size_t v_c = 0;
  /// p^2 times the number of colour-c pairs.
  double expected_e_c = 0.0;
  /// Chernoff bound on P(e_c <= sqrt n); 1 when it says nothing.
  double chernoff = 1.0;
  /// Exact cover of c in G - S (cliques left with >= 2 vertices).
  std::size_t survivor_cover = 0;
  /// cover - 3 v_c, floored at 0.
  std::size_t conservative_cover = 0;
  bool sparse = false;        // e_c <= sqrt n
  bool cover_dropped = false; // survivor_cover < cover_floor
};

struct CombinedSolve {
  /// Rainbow matching found in G - S.
  std::size_t outer_size = 0;
  SolveReason outer_reason = SolveReason::BudgetExhausted;
  /// Edges added greedily inside S for the colours left over.
  std::size_t inner_size = 0;
  RainbowMatching matching;
  bool valid = false;
};

struct SamplingReport {
  std::size_t n = 0;
  std::size_t vertex_count = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  std::vector<Vertex> sample;
  double sqrt_n = 0.0;
  /// (1 - 6p) times the smallest colour cover, floored at 0.
  double cover_floor = 0.0;
  std::vector<ColourSample> colours;
  std::size_t sparse_count = 0;
  std::size_t cover_drop_count = 0;
  /// Sum of the per-colour Chernoff bounds: expected number of sparse colours.
  double chernoff_sum = 0.0;
  std::optional<CombinedSolve> combined;
};

struct SamplingOptions {
  bool solve = true;
  SolverBudget budget{100'000, 30.0, std::nullopt};
};

/// Samples S by keeping each vertex with probability p, records the
/// per-colour statistics, then (optionally) runs local_search on G - S and
/// completes greedily inside G[S] with the unused colours.
SamplingReport sampling_experiment(const Instance& instance, std::uint64_t seed, const SamplingOptions& options = {});

}  // namespace rainbow
