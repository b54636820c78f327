#include "rainbow/types.hpp"

#include <algorithm>

namespace rainbow {

std::string to_string(const EdgePair& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

std::string to_string(const ColouredEdge& e) { return to_string(e.pair) + ":" + std::to_string(e.colour); }

bool is_vertex_disjoint(std::span<const EdgePair> pairs) {
  std::vector<Vertex> ends;
  ends.reserve(2 * pairs.size());
  for (const auto& p : pairs) {
    if (p.a == p.b) return false;
    ends.push_back(p.a);
    ends.push_back(p.b);
  }
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

std::vector<Vertex> Matching::vertices() const {
  std::vector<Vertex> out;
  out.reserve(2 * pairs.size());
  for (const auto& p : pairs) {
    out.push_back(p.a);
    out.push_back(p.b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Vertex Matching::partner(Vertex v) const {
  for (const auto& p : pairs)
    if (p.touches(v)) return p.other(v);
  return v;
}

ColourSet RainbowMatching::used_colours(std::size_t colour_count) const {
  ColourSet used(colour_count);
  for (Colour c : colours)
    if (c < colour_count) used.insert(c);
  return used;
}

std::vector<ColouredEdge> RainbowMatching::canonical() const {
  std::vector<ColouredEdge> out;
  out.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size() && i < colours.size(); ++i) out.push_back({colours[i], pairs[i]});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rainbow
