// Brute-force reference implementations used to cross-check the library.
// They read the raw clique lists only and share no code with the solvers.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/generators.hpp"
#include "rainbow/horns.hpp"
#include "rainbow/instance.hpp"
#include "rainbow/rng.hpp"

namespace oracle {

using rainbow::Colour;
using rainbow::EdgePair;
using rainbow::Instance;
using rainbow::Vertex;

/// Raw pair membership: colour c has a clique containing both a and b.
bool same_clique(const Instance& g, Colour c, Vertex a, Vertex b);

/// Every (colour, pair) of the instance, by colour then pair.
std::vector<rainbow::ColouredEdge> all_coloured_edges(const Instance& g);

/// Size of a maximum rainbow matching: memoized recursion over
/// (colour, used-vertex mask). vertex_count <= 30.
std::size_t max_rainbow(const Instance& g);

/// From-scratch rainbow check.
bool is_rainbow(const Instance& g, const rainbow::RainbowMatching& m);

/// Maximum matching of a bipartite graph given by adjacency lists; right
/// side ids < 32. Exhaustive over right-side masks.
std::size_t max_bipartite(const std::vector<std::vector<Vertex>>& adj);

/// Candidate graph of t-auxiliary matchings, from the definition.
std::vector<std::vector<Vertex>> aux_candidate_graph(const Instance& g, const rainbow::RainbowMatching& m,
                                                     std::size_t t);

/// All horns by scanning pairs of coloured edges; certificates sorted.
std::vector<rainbow::HornCertificate> horns(const Instance& g, const rainbow::Matching& m,
                                            const rainbow::ColourSet& colours);

/// Maximum matching in a general graph given as an edge list on < 32 vertices.
std::size_t max_matching(const std::vector<EdgePair>& edges);

/// Largest partial transversal of a Latin square, by trying every partial
/// row-to-column injection.
std::size_t max_transversal(const rainbow::LatinSquare& square);

/// Random valid instance with cliques of size 2..max_clique and partial
/// covers; used as fuzz input.
Instance random_instance(rainbow::Rng& rng, std::size_t n, std::size_t vertex_count, std::size_t max_clique = 4,
                         double cover_probability = 0.85);

/// Maximal rainbow matching from a random colour order and random pairs.
rainbow::RainbowMatching random_maximal(const Instance& g, rainbow::Rng& rng);

/// Random rainbow matching, not necessarily maximal.
rainbow::RainbowMatching random_rainbow(const Instance& g, rainbow::Rng& rng);

}  // namespace oracle
