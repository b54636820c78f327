#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

using Vertex = std::uint32_t;
using Colour = std::uint32_t;

/// Unordered pair of distinct vertices, kept as (min, max).
struct EdgePair {
  Vertex a = 0;
  Vertex b = 0;

  EdgePair() = default;
  EdgePair(Vertex x, Vertex y) : a(std::min(x, y)), b(std::max(x, y)) {}

  bool touches(Vertex v) const { return a == v || b == v; }
  bool meets(const EdgePair& other) const { return touches(other.a) || touches(other.b); }
  Vertex other(Vertex v) const { return v == a ? b : a; }

  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

/// A pair together with one colour whose class contains it.
/// Ordered by colour first, then pair.
struct ColouredEdge {
  Colour colour = 0;
  EdgePair pair;

  friend auto operator<=>(const ColouredEdge&, const ColouredEdge&) = default;
};

std::string to_string(const EdgePair& p);
std::string to_string(const ColouredEdge& e);

/// Dense subset of [0, universe). Tagged so vertex and colour sets do not mix.
template <class Tag>
class IdSet {
 public:
  IdSet() = default;
  explicit IdSet(std::size_t universe) : bits_(universe, false) {}
  IdSet(std::size_t universe, std::initializer_list<std::uint32_t> ids) : IdSet(universe) {
    for (auto id : ids) insert(id);
  }

  static IdSet all(std::size_t universe) {
    IdSet s(universe);
    s.bits_.assign(universe, true);
    s.count_ = universe;
    return s;
  }

  template <class Range>
  static IdSet of(std::size_t universe, const Range& ids) {
    IdSet s(universe);
    for (auto id : ids) s.insert(static_cast<std::uint32_t>(id));
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(std::uint32_t id) const { return id < bits_.size() && bits_[id]; }

  bool insert(std::uint32_t id) {
    if (id >= bits_.size()) throw std::out_of_range("id " + std::to_string(id) + " outside set universe");
    if (bits_[id]) return false;
    bits_[id] = true;
    ++count_;
    return true;
  }

  bool erase(std::uint32_t id) {
    if (!contains(id)) return false;
    bits_[id] = false;
    --count_;
    return true;
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(static_cast<std::uint32_t>(i));
    return out;
  }

  IdSet complement() const {
    IdSet s(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (!bits_[i]) s.insert(static_cast<std::uint32_t>(i));
    return s;
  }

  bool is_subset_of(const IdSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.contains(static_cast<std::uint32_t>(i))) return false;
    return true;
  }

  friend IdSet operator|(IdSet lhs, const IdSet& rhs) {
    for (auto id : rhs.members())
      if (id < lhs.universe()) lhs.insert(id);
    return lhs;
  }

  friend bool operator==(const IdSet&, const IdSet&) = default;

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

struct VertexTag {};
struct ColourTag {};
using VertexSet = IdSet<VertexTag>;
using ColourSet = IdSet<ColourTag>;

/// True when no vertex is shared between two pairs.
bool is_vertex_disjoint(std::span<const EdgePair> pairs);

/// A set of pairwise vertex-disjoint pairs. Disjointness is checked by the
/// operations that consume a Matching, not on construction.
struct Matching {
  std::vector<EdgePair> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  /// Sorted endpoints.
  std::vector<Vertex> vertices() const;
  /// Partner of v in the matching; v itself when unmatched.
  Vertex partner(Vertex v) const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Pairs with one colour each; index i of `pairs` carries colour `colours[i]`.
struct RainbowMatching {
  std::vector<EdgePair> pairs;
  std::vector<Colour> colours;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  void add(EdgePair p, Colour c) {
    pairs.push_back(p);
    colours.push_back(c);
  }
  Matching matching() const { return Matching{pairs}; }
  std::vector<Vertex> vertices() const { return matching().vertices(); }
  ColourSet used_colours(std::size_t colour_count) const;

  /// Canonical key: (colour, pair) entries sorted. Two matchings with the
  /// same key are the same coloured edge set.
  std::vector<ColouredEdge> canonical() const;

  friend bool operator==(const RainbowMatching&, const RainbowMatching&) = default;
};

}  // namespace rainbow
