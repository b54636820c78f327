#include "rainbow/auxiliary.hpp"

#include <algorithm>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

Matching AuxiliaryMatching::n_matching() const {
  Matching out;
  for (const auto& e : edges) out.pairs.push_back(e.pair());
  return out;
}

std::vector<std::size_t> AuxiliaryMatching::m_n_indices() const {
  std::vector<std::size_t> out;
  for (const auto& e : edges) out.push_back(e.m_index);
  return out;
}

ColourSet AuxiliaryMatching::c_n(std::size_t colour_count) const {
  ColourSet out(colour_count);
  for (const auto& e : edges) out.insert(e.colour);
  return out;
}

namespace {

struct Candidate {
  Vertex z;
  Vertex x;
  std::vector<Colour> witnesses;
};

void require_aux_input(const Instance& instance, const RainbowMatching& m, std::size_t t) {
  if (t == 0) throw PreconditionError("auxiliary matching threshold t must be at least 1");
  if (!instance.valid())
    throw PreconditionError("auxiliary matching requires a valid instance: " + instance.violations().front().message());
  if (auto check = verify_rainbow(instance, m); !check)
    throw PreconditionError("auxiliary matching: not a rainbow matching: " + check.violation);
}

// Per M-edge, candidate outside vertices ascending with the chosen endpoint
// and its witness colours.
std::vector<std::vector<Candidate>> candidate_graph(const Instance& instance, const RainbowMatching& m,
                                                    std::size_t t) {
  const std::size_t vcount = instance.vertex_count();
  std::vector<char> in_m(vcount, 0);
  for (const auto& p : m.pairs) in_m[p.a] = in_m[p.b] = 1;
  const ColourSet used = m.used_colours(instance.colour_count());

  std::vector<std::vector<Candidate>> out(m.size());
  std::vector<std::vector<Colour>> repeats(vcount);
  std::vector<Vertex> touched;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<Candidate>& row = out[i];
    for (Vertex x : {m.pairs[i].a, m.pairs[i].b}) {
      touched.clear();
      for (Colour c = 0; c < instance.colour_count(); ++c) {
        if (used.contains(c)) continue;
        for (Vertex z : instance.clique_containing(c, x)) {
          if (in_m[z]) continue;
          if (repeats[z].empty()) touched.push_back(z);
          repeats[z].push_back(c);
        }
      }
      for (Vertex z : touched) {
        if (repeats[z].size() >= t) {
          auto it = std::find_if(row.begin(), row.end(), [z](const Candidate& cand) { return cand.z == z; });
          const bool better = it == row.end() || x < it->x;
          if (it == row.end()) row.push_back({z, x, repeats[z]});
          else if (better) *it = {z, x, repeats[z]};
        }
        repeats[z].clear();
      }
    }
    std::sort(row.begin(), row.end(), [](const Candidate& l, const Candidate& r) { return l.z < r.z; });
  }
  return out;
}

class Kuhn {
 public:
  Kuhn(const std::vector<std::vector<Candidate>>& graph, std::size_t right_size)
      : graph_(graph), match_right_(right_size, kNone), match_left_(graph.size(), kNone), seen_(right_size, 0) {}

  void run() {
    for (std::size_t left = 0; left < graph_.size(); ++left) {
      ++stamp_;
      augment(left);
    }
  }

  // Index into graph_[left] of the chosen candidate, or kNone.
  std::size_t choice(std::size_t left) const { return match_left_[left]; }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  bool augment(std::size_t left) {
    for (std::size_t k = 0; k < graph_[left].size(); ++k) {
      const Vertex z = graph_[left][k].z;
      if (seen_[z] == stamp_) continue;
      seen_[z] = stamp_;
      if (match_right_[z] == kNone || augment(match_right_[z])) {
        match_right_[z] = left;
        match_left_[left] = k;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<Candidate>>& graph_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> seen_;
  std::size_t stamp_ = 0;
};

}  // namespace

std::vector<std::vector<Vertex>> aux_candidates(const Instance& instance, const RainbowMatching& m, std::size_t t) {
  require_aux_input(instance, m, t);
  std::vector<std::vector<Vertex>> out;
  for (const auto& row : candidate_graph(instance, m, t)) {
    out.emplace_back();
    for (const auto& cand : row) out.back().push_back(cand.z);
  }
  return out;
}

AuxiliaryMatching find_aux_matching(const Instance& instance, const RainbowMatching& m, std::size_t t) {
  require_aux_input(instance, m, t);
  const auto graph = candidate_graph(instance, m, t);
  Kuhn kuhn(graph, instance.vertex_count());
  kuhn.run();

  AuxiliaryMatching aux;
  aux.t = t;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const std::size_t k = kuhn.choice(i);
    if (k == Kuhn::kNone) continue;
    const Candidate& cand = graph[i][k];
    AuxEdge edge;
    edge.m_index = i;
    edge.x = cand.x;
    edge.m = m.pairs[i].other(cand.x);
    edge.v = cand.z;
    edge.colour = m.colours[i];
    edge.witnesses = cand.witnesses;
    aux.edges.push_back(std::move(edge));
  }
  return aux;
}

Matching extract_matching_triangles(std::size_t vertex_count, const Matching& m, const VertexSet& a,
                                    const ColourClass& h, std::size_t s) {
  auto fail = [](const std::string& what) { throw PreconditionError("extract_matching_triangles: " + what); };
  if (s == 0) fail("target s must be at least 1");
  if (a.universe() != vertex_count) fail("vertex set A has the wrong universe");
  for (const auto& p : m.pairs)
    if (p.b >= vertex_count) fail("matching vertex " + std::to_string(p.b) + " out of range");
  if (!is_vertex_disjoint(m.pairs)) fail("M is not a matching");

  const std::vector<Vertex> vm = m.vertices();
  std::vector<char> in_m(vertex_count, 0);
  for (Vertex v : vm) in_m[v] = 1;
  std::vector<char> in_ma(vertex_count, 0);
  for (Vertex x : a.members()) {
    if (!in_m[x]) fail("A is not contained in V(M): vertex " + std::to_string(x));
    in_ma[m.partner(x)] = 1;
  }
  for (Vertex x : a.members())
    if (in_ma[x]) fail("A meets m(A) at vertex " + std::to_string(x));

  // Outside S = V(M) \ A, i.e. A u (V \ V(M)).
  auto outside_s = [&](Vertex v) { return !in_m[v] || a.contains(v); };
  for (std::size_t i = 0; i < h.clique_count(); ++i) {
    const auto clique = h.clique(i);
    for (Vertex v : clique)
      if (v >= vertex_count) fail("H vertex " + std::to_string(v) + " out of range");
    Vertex first = 0;
    bool seen = false;
    for (Vertex v : clique) {
      if (!outside_s(v)) continue;
      if (seen) fail("H has edge " + to_string(EdgePair(first, v)) + " inside A u (V \\ V(M))");
      first = v;
      seen = true;
    }
  }
  if (h.cover() < 2 * m.size() + s)
    fail("H covers " + std::to_string(h.cover()) + " vertices, fewer than 2|M| + s = " +
         std::to_string(2 * m.size() + s));

  Matching out;
  for (std::size_t i = 0; i < h.clique_count(); ++i) {
    const auto clique = h.clique(i);
    auto outer = std::find_if(clique.begin(), clique.end(), outside_s);
    if (outer == clique.end()) continue;
    for (Vertex w : clique) {
      if (w == *outer || in_ma[w]) continue;
      out.pairs.emplace_back(*outer, w);
      break;
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  if (out.size() < s) throw std::logic_error("extract_matching_triangles produced fewer than s edges");
  return out;
}

}  // namespace rainbow
