#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/instance.hpp"

namespace rainbow {

/// One pair v_e x_e of an auxiliary matching, attached to the M-edge
/// e = M.pairs[m_index].
struct AuxEdge {
  std::size_t m_index = 0;
  /// Endpoint of e covered by the auxiliary matching.
  Vertex x = 0;
  /// Other endpoint of e.
  Vertex m = 0;
  /// Partner of x, outside V(M).
  Vertex v = 0;
  /// Colour of e in M.
  Colour colour = 0;
  /// Colours unused by M whose class contains the pair (x, v), ascending.
  std::vector<Colour> witnesses;

  EdgePair pair() const { return {x, v}; }

  friend bool operator==(const AuxEdge&, const AuxEdge&) = default;
};

/// A t-auxiliary matching N for a rainbow matching M, with the M_N / x_e /
/// v_e / m(x_e) / C_N bookkeeping. Edges are ordered by m_index.
struct AuxiliaryMatching {
  std::size_t t = 1;
  std::vector<AuxEdge> edges;

  std::size_t size() const { return edges.size(); }
  Matching n_matching() const;
  /// Indices into M of the edges touched by N.
  std::vector<std::size_t> m_n_indices() const;
  ColourSet c_n(std::size_t colour_count) const;
};

/// Maximum t-auxiliary matching. Candidate graph: M-edge i against outside
/// vertex z whenever some endpoint x of M.pairs[i] makes (x, z) repeated in
/// at least t colours unused by M (lowest such x). Maximum bipartite matching
/// by augmenting paths, M-edges in index order and outside vertices ascending.
/// Throws PreconditionError unless M is rainbow or when t == 0.
AuxiliaryMatching find_aux_matching(const Instance& instance, const RainbowMatching& m, std::size_t t);

/// The candidate graph used by find_aux_matching: for each M-edge, the
/// outside vertices it may be matched to, ascending.
std::vector<std::vector<Vertex>> aux_candidates(const Instance& instance, const RainbowMatching& m, std::size_t t);

/// Matching inside H with one endpoint in V(M) \ (A u m(A)) and the other in
/// A u (V \ V(M)), of size at least s. Every vertex of H outside
/// S = V(M) \ A is paired with its lowest H-neighbour in S \ m(A).
///
/// Throws PreconditionError naming the failed hypothesis: M not a matching,
/// A not inside V(M), A meeting m(A), an H edge inside A u (V \ V(M)), or H
/// covering fewer than 2|M| + s vertices. Vertex ids must be below
/// vertex_count.
Matching extract_matching_triangles(std::size_t vertex_count, const Matching& m, const VertexSet& a,
                                    const ColourClass& h, std::size_t s);

}  // namespace rainbow
