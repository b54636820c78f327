#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/types.hpp"

namespace rainbow {

/// Vertices of one monochromatic clique. Non-trivial cliques have size >= 2.
using Clique = std::vector<Vertex>;

/// The cliques of one colour, stored flat (CSR) so that instances with
/// thousands of colours stay compact.
class ColourClass {
 public:
  ColourClass() = default;
  explicit ColourClass(Colour colour) : colour_(colour) {}
  ColourClass(Colour colour, const std::vector<Clique>& cliques);

  Colour colour() const { return colour_; }
  std::size_t clique_count() const { return offsets_.size() - 1; }
  std::span<const Vertex> clique(std::size_t i) const {
    return {vertices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  /// Total number of vertices over all cliques.
  std::size_t cover() const { return vertices_.size(); }

  void add_clique(std::span<const Vertex> clique);
  void add_clique(std::initializer_list<Vertex> clique) {
    add_clique(std::span<const Vertex>(clique.begin(), clique.size()));
  }

  /// Sorts vertices inside each clique and cliques by their smallest vertex.
  void canonicalize();

  std::vector<Clique> cliques() const;

  friend bool operator==(const ColourClass&, const ColourClass&) = default;

 private:
  Colour colour_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<std::uint32_t> offsets_{0};
};

/// One breach of the instance invariants.
struct Violation {
  std::optional<Colour> colour;
  std::optional<std::size_t> clique;
  std::string reason;

  std::string message() const;
};

/// An n-edge-coloured multigraph whose colour classes are unions of
/// vertex-disjoint cliques over the vertex set [0, vertex_count).
///
/// The constructor canonicalizes the classes and records every invariant
/// breach; it never throws on bad data. Queries below require valid() and
/// throw std::logic_error otherwise. Instances are immutable.
class Instance {
 public:
  Instance() = default;
  Instance(std::size_t colour_count, std::size_t vertex_count, std::vector<ColourClass> classes);

  std::size_t colour_count() const { return colour_count_; }
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<ColourClass>& classes() const { return classes_; }

  bool valid() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  /// Every clique has size 2 or 3.
  bool normalized() const { return normalized_; }

  const ColourClass& colour_class(Colour c) const;
  /// Index of the c-clique containing v, or -1.
  std::int32_t clique_index(Colour c, Vertex v) const;
  /// The c-clique containing v; empty when v is not covered by c.
  std::span<const Vertex> clique_containing(Colour c, Vertex v) const;
  bool has_edge(Colour c, EdgePair p) const;
  /// All c-coloured pairs in canonical order.
  std::vector<EdgePair> colour_edges(Colour c) const;
  std::size_t min_cover() const;

  friend bool operator==(const Instance& lhs, const Instance& rhs) {
    return lhs.colour_count_ == rhs.colour_count_ && lhs.vertex_count_ == rhs.vertex_count_ &&
           lhs.classes_ == rhs.classes_;
  }

 private:
  void require_valid() const;

  std::size_t colour_count_ = 0;
  std::size_t vertex_count_ = 0;
  std::vector<ColourClass> classes_;
  std::vector<Violation> violations_;
  bool normalized_ = true;
  // colour-major: membership_[c * vertex_count_ + v] = clique index or -1
  std::vector<std::int32_t> membership_;
};

/// Invariant breaches of the instance, in class/clique order. Empty iff valid.
std::vector<Violation> validate(const Instance& instance);

/// Splits every clique into edges plus at most one leading triangle,
/// pairing vertices in ascending order. Per-colour cover is unchanged.
Instance normalize(const Instance& instance);

/// Number of colours with a clique containing both endpoints.
std::size_t pair_multiplicity(const Instance& instance, EdgePair pair);
/// Same, counting only colours in `colours`.
std::size_t pair_multiplicity(const Instance& instance, EdgePair pair, const ColourSet& colours);

/// Largest pair multiplicity over all pairs.
std::size_t max_multiplicity(const Instance& instance);

/// Coloured pairs with one endpoint in X and the other in Y, colour in
/// `colours`; ordered by colour then pair, each (colour, pair) once.
std::vector<ColouredEdge> edges_between(const Instance& instance, const VertexSet& x, const VertexSet& y,
                                        const ColourSet& colours);

struct RainbowCheck {
  bool ok = true;
  std::string violation;
  explicit operator bool() const { return ok; }
};

/// Checks vertex-disjointness, distinct colours and colour-class membership.
RainbowCheck verify_rainbow(const Instance& instance, const RainbowMatching& rm);

struct MaximalityCheck {
  bool maximal = true;
  /// Present iff not maximal: a disjoint pair in an unused colour.
  std::optional<ColouredEdge> extension;
};

/// Extension-maximality: no edge of an unused colour is disjoint from rm.
/// The witness is the smallest such edge (colour, then pair).
MaximalityCheck is_maximal(const Instance& instance, const RainbowMatching& rm);

/// Smallest c-coloured pair (canonical order) with both endpoints unblocked.
/// `blocked` is indexed by vertex.
std::optional<EdgePair> first_free_pair(const Instance& instance, Colour c, std::span<const char> blocked);

/// Subgraph on `keep`: every clique is intersected with it and dropped when
/// fewer than two vertices remain. The vertex universe is unchanged.
Instance restrict_to(const Instance& instance, const VertexSet& keep);

/// min(n, floor(vertex_count / 2)): no rainbow matching is larger.
std::size_t trivial_upper_bound(const Instance& instance);

}  // namespace rainbow
