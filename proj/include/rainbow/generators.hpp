#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "rainbow/instance.hpp"

namespace rainbow {

/// n x n array over symbols [0, n); every row and column is a permutation.
class LatinSquare {
 public:
  /// Throws std::invalid_argument when the cells do not form a Latin square.
  explicit LatinSquare(std::vector<std::vector<std::uint32_t>> cells);

  /// cells[r][c] = (r + c) mod n.
  static LatinSquare cyclic(std::size_t order);

  std::size_t order() const { return cells_.size(); }
  std::uint32_t at(std::size_t row, std::size_t col) const { return cells_[row][col]; }
  const std::vector<std::vector<std::uint32_t>>& cells() const { return cells_; }

 private:
  std::vector<std::vector<std::uint32_t>> cells_;
};

struct ParsedSquare {
  LatinSquare square;
  /// The input used symbols 1..n and was shifted to 0..n-1.
  bool one_based = false;
};

/// Plain text: n lines of n whitespace-separated symbols, 0..n-1 or 1..n.
ParsedSquare parse_latin_square(std::string_view text);

/// Knobs for gen_random.
struct RandomSpec {
  std::size_t n = 4;
  /// Minimum cover per colour.
  std::size_t v = 10;
  std::size_t max_multiplicity = 4;
  /// Probability of drawing a triangle rather than an edge.
  double triangle_fraction = 0.5;
  std::uint64_t seed = 0;
  /// Vertex universe; 0 means exactly v.
  std::size_t vertex_count = 0;
};

/// n-1 disjoint triangles on 3(n-1) vertices, repeated in all n colours.
Instance gen_triangle_extremal(std::size_t n);

/// Two disjoint K4s (vertices 0-3 and 4-7), each properly 3-edge-coloured by
/// its three perfect matchings.
Instance gen_double_k4();

/// K_{n,n} coloured by the square (rows 0..n-1, columns n..2n-1) plus c/2
/// disjoint stars K_{1,n}, one edge of every colour per star. Star j has its
/// centre at 2n + j(n+1) followed by its leaves in colour order.
Instance gen_latin_bridge(const LatinSquare& square, std::size_t c);

/// Seeded random instance: each colour takes random disjoint triangles/edges
/// until its cover reaches v, never pushing a pair above max_multiplicity.
/// Throws InfeasibleSpec when the budget cannot be met.
Instance gen_random(const RandomSpec& spec);

}  // namespace rainbow
