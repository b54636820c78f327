#include "rainbow/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rainbow/errors.hpp"

namespace rainbow {

ColourClass::ColourClass(Colour colour, const std::vector<Clique>& cliques) : colour_(colour) {
  for (const auto& q : cliques) add_clique(q);
}

void ColourClass::add_clique(std::span<const Vertex> clique) {
  vertices_.insert(vertices_.end(), clique.begin(), clique.end());
  offsets_.push_back(static_cast<std::uint32_t>(vertices_.size()));
}

void ColourClass::canonicalize() {
  const std::size_t k = clique_count();
  for (std::size_t i = 0; i < k; ++i)
    std::sort(vertices_.begin() + offsets_[i], vertices_.begin() + offsets_[i + 1]);

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [this](std::size_t x, std::size_t y) {
    auto qx = clique(x);
    auto qy = clique(y);
    return std::lexicographical_compare(qx.begin(), qx.end(), qy.begin(), qy.end());
  });
  if (std::is_sorted(order.begin(), order.end())) return;

  std::vector<Vertex> vertices;
  std::vector<std::uint32_t> offsets{0};
  vertices.reserve(vertices_.size());
  offsets.reserve(offsets_.size());
  for (std::size_t i : order) {
    auto q = clique(i);
    vertices.insert(vertices.end(), q.begin(), q.end());
    offsets.push_back(static_cast<std::uint32_t>(vertices.size()));
  }
  vertices_ = std::move(vertices);
  offsets_ = std::move(offsets);
}

std::vector<Clique> ColourClass::cliques() const {
  std::vector<Clique> out;
  out.reserve(clique_count());
  for (std::size_t i = 0; i < clique_count(); ++i) {
    auto q = clique(i);
    out.emplace_back(q.begin(), q.end());
  }
  return out;
}

std::string Violation::message() const {
  std::string out;
  if (colour) out += "colour " + std::to_string(*colour);
  if (clique) out += (out.empty() ? "" : ", ") + std::string("clique ") + std::to_string(*clique);
  if (!out.empty()) out += ": ";
  return out + reason;
}

Instance::Instance(std::size_t colour_count, std::size_t vertex_count, std::vector<ColourClass> classes)
    : colour_count_(colour_count), vertex_count_(vertex_count), classes_(std::move(classes)) {
  for (auto& cls : classes_) cls.canonicalize();
  std::stable_sort(classes_.begin(), classes_.end(),
                   [](const ColourClass& x, const ColourClass& y) { return x.colour() < y.colour(); });

  if (classes_.size() != colour_count_)
    violations_.push_back({std::nullopt, std::nullopt,
                           "expected " + std::to_string(colour_count_) + " colour classes, found " +
                               std::to_string(classes_.size())});

  std::vector<char> seen(colour_count_, 0);
  std::vector<char> indexed(classes_.size(), 0);
  for (std::size_t pos = 0; pos < classes_.size(); ++pos) {
    const Colour c = classes_[pos].colour();
    if (c >= colour_count_) {
      violations_.push_back({c, std::nullopt, "colour id out of range"});
    } else if (seen[c]) {
      violations_.push_back({c, std::nullopt, "duplicate class for colour " + std::to_string(c)});
    } else {
      seen[c] = 1;
      indexed[pos] = 1;
    }
  }
  for (Colour c = 0; c < colour_count_; ++c)
    if (!seen[c]) violations_.push_back({c, std::nullopt, "missing class for colour " + std::to_string(c)});

  membership_.assign(colour_count_ * vertex_count_, -1);
  for (std::size_t pos = 0; pos < classes_.size(); ++pos) {
    const ColourClass& cls = classes_[pos];
    const Colour c = cls.colour();
    for (std::size_t i = 0; i < cls.clique_count(); ++i) {
      auto q = cls.clique(i);
      if (q.size() > 3) normalized_ = false;
      if (q.size() < 2) {
        normalized_ = false;
        violations_.push_back({c, i, "trivial clique"});
      }
      for (std::size_t j = 0; j < q.size(); ++j) {
        const Vertex v = q[j];
        if (j > 0 && q[j - 1] == v) {
          violations_.push_back({c, i, "duplicate vertex " + std::to_string(v)});
          continue;
        }
        if (v >= vertex_count_) {
          violations_.push_back({c, i, "vertex " + std::to_string(v) + " out of range"});
          continue;
        }
        if (!indexed[pos]) continue;
        auto& slot = membership_[c * vertex_count_ + v];
        if (slot >= 0) {
          violations_.push_back({c, i,
                                 "overlapping cliques in colour " + std::to_string(c) + " (vertex " +
                                     std::to_string(v) + " also in clique " + std::to_string(slot) + ")"});
        } else {
          slot = static_cast<std::int32_t>(i);
        }
      }
    }
  }
  if (!valid()) membership_.clear();
}

void Instance::require_valid() const {
  if (!valid()) throw std::logic_error("operation requires a valid instance: " + violations_.front().message());
}

const ColourClass& Instance::colour_class(Colour c) const {
  require_valid();
  if (c >= colour_count_) throw std::out_of_range("colour " + std::to_string(c) + " out of range");
  return classes_[c];
}

std::int32_t Instance::clique_index(Colour c, Vertex v) const {
  require_valid();
  if (c >= colour_count_ || v >= vertex_count_)
    throw std::out_of_range("colour/vertex out of range in clique lookup");
  return membership_[c * vertex_count_ + v];
}

std::span<const Vertex> Instance::clique_containing(Colour c, Vertex v) const {
  const std::int32_t idx = clique_index(c, v);
  if (idx < 0) return {};
  return classes_[c].clique(static_cast<std::size_t>(idx));
}

bool Instance::has_edge(Colour c, EdgePair p) const {
  if (p.a == p.b) return false;
  const std::int32_t ia = clique_index(c, p.a);
  return ia >= 0 && ia == clique_index(c, p.b);
}

std::vector<EdgePair> Instance::colour_edges(Colour c) const {
  const ColourClass& cls = colour_class(c);
  std::vector<EdgePair> out;
  for (std::size_t i = 0; i < cls.clique_count(); ++i) {
    auto q = cls.clique(i);
    for (std::size_t x = 0; x < q.size(); ++x)
      for (std::size_t y = x + 1; y < q.size(); ++y) out.emplace_back(q[x], q[y]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Instance::min_cover() const {
  if (classes_.empty()) return 0;
  std::size_t best = classes_.front().cover();
  for (const auto& cls : classes_) best = std::min(best, cls.cover());
  return best;
}

std::vector<Violation> validate(const Instance& instance) { return instance.violations(); }

Instance normalize(const Instance& instance) {
  if (!instance.valid())
    throw PreconditionError("normalize requires a valid instance: " + instance.violations().front().message());
  std::vector<ColourClass> classes;
  classes.reserve(instance.colour_count());
  for (const auto& cls : instance.classes()) {
    ColourClass out(cls.colour());
    for (std::size_t i = 0; i < cls.clique_count(); ++i) {
      auto q = cls.clique(i);
      std::size_t start = 0;
      if (q.size() % 2 == 1) {
        out.add_clique(q.subspan(0, 3));
        start = 3;
      }
      for (std::size_t j = start; j + 1 < q.size(); j += 2) out.add_clique(q.subspan(j, 2));
    }
    classes.push_back(std::move(out));
  }
  return Instance(instance.colour_count(), instance.vertex_count(), std::move(classes));
}

namespace {

void check_pair_range(const Instance& instance, EdgePair pair) {
  if (pair.b >= instance.vertex_count())
    throw std::out_of_range("vertex " + std::to_string(pair.b) + " out of range");
}

}  // namespace

std::size_t pair_multiplicity(const Instance& instance, EdgePair pair) {
  return pair_multiplicity(instance, pair, ColourSet::all(instance.colour_count()));
}

std::size_t pair_multiplicity(const Instance& instance, EdgePair pair, const ColourSet& colours) {
  check_pair_range(instance, pair);
  std::size_t count = 0;
  for (Colour c = 0; c < instance.colour_count(); ++c)
    if (colours.contains(c) && instance.has_edge(c, pair)) ++count;
  return count;
}

std::size_t max_multiplicity(const Instance& instance) {
  const std::size_t n = instance.colour_count();
  const std::size_t vc = instance.vertex_count();
  std::vector<std::uint32_t> count(vc, 0);
  std::vector<Vertex> touched;
  std::size_t best = 0;
  for (Vertex a = 0; a < vc; ++a) {
    for (Colour c = 0; c < n; ++c) {
      for (Vertex b : instance.clique_containing(c, a)) {
        if (b <= a) continue;
        if (count[b]++ == 0) touched.push_back(b);
        best = std::max<std::size_t>(best, count[b]);
      }
    }
    for (Vertex b : touched) count[b] = 0;
    touched.clear();
  }
  return best;
}

std::vector<ColouredEdge> edges_between(const Instance& instance, const VertexSet& x, const VertexSet& y,
                                        const ColourSet& colours) {
  std::vector<ColouredEdge> out;
  for (Colour c = 0; c < instance.colour_count(); ++c) {
    if (!colours.contains(c)) continue;
    const std::size_t first = out.size();
    const ColourClass& cls = instance.colour_class(c);
    for (std::size_t i = 0; i < cls.clique_count(); ++i) {
      auto q = cls.clique(i);
      for (std::size_t s = 0; s < q.size(); ++s)
        for (std::size_t t = s + 1; t < q.size(); ++t) {
          const Vertex u = q[s], w = q[t];
          if ((x.contains(u) && y.contains(w)) || (x.contains(w) && y.contains(u)))
            out.push_back({c, EdgePair(u, w)});
        }
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
  }
  return out;
}

RainbowCheck verify_rainbow(const Instance& instance, const RainbowMatching& rm) {
  if (!instance.valid()) return {false, "invalid instance"};
  if (rm.pairs.size() != rm.colours.size()) return {false, "pairs and colours differ in length"};
  const std::size_t n = instance.colour_count();
  const std::size_t vc = instance.vertex_count();
  std::vector<char> colour_used(n, 0);
  std::vector<char> vertex_used(vc, 0);
  for (std::size_t i = 0; i < rm.size(); ++i) {
    const EdgePair p = rm.pairs[i];
    const Colour c = rm.colours[i];
    const std::string where = "entry " + std::to_string(i) + " " + to_string(p) + ": ";
    if (p.a == p.b) return {false, where + "degenerate pair"};
    if (p.b >= vc) return {false, where + "vertex out of range"};
    if (c >= n) return {false, where + "colour out of range"};
    if (colour_used[c]) return {false, "duplicate colour " + std::to_string(c)};
    colour_used[c] = 1;
    for (Vertex v : {p.a, p.b}) {
      if (vertex_used[v]) return {false, where + "pairs share vertex " + std::to_string(v)};
      vertex_used[v] = 1;
    }
    if (!instance.has_edge(c, p)) return {false, where + "pair not in colour class " + std::to_string(c)};
  }
  return {};
}

MaximalityCheck is_maximal(const Instance& instance, const RainbowMatching& rm) {
  if (auto check = verify_rainbow(instance, rm); !check)
    throw PreconditionError("is_maximal requires a rainbow matching: " + check.violation);
  std::vector<char> used(instance.vertex_count(), 0);
  for (const auto& p : rm.pairs) used[p.a] = used[p.b] = 1;
  const ColourSet colours = rm.used_colours(instance.colour_count());
  for (Colour c = 0; c < instance.colour_count(); ++c) {
    if (colours.contains(c)) continue;
    if (auto p = first_free_pair(instance, c, used)) return {false, ColouredEdge{c, *p}};
  }
  return {};
}

std::optional<EdgePair> first_free_pair(const Instance& instance, Colour c, std::span<const char> blocked) {
  const ColourClass& cls = instance.colour_class(c);
  std::optional<EdgePair> best;
  for (std::size_t i = 0; i < cls.clique_count(); ++i) {
    auto q = cls.clique(i);
    // Cliques are sorted by smallest vertex, so once q[0] exceeds best.a no
    // later clique can hold a smaller pair.
    if (best && q[0] > best->a) break;
    Vertex free[2];
    int found = 0;
    for (Vertex v : q) {
      if (!blocked[v]) free[found++] = v;
      if (found == 2) break;
    }
    if (found == 2) {
      EdgePair p(free[0], free[1]);
      if (!best || p < *best) best = p;
    }
  }
  return best;
}

Instance restrict_to(const Instance& instance, const VertexSet& keep) {
  if (keep.universe() != instance.vertex_count())
    throw std::invalid_argument("restrict_to: vertex set universe does not match the instance");
  std::vector<ColourClass> classes;
  classes.reserve(instance.colour_count());
  std::vector<Vertex> kept;
  for (const auto& cls : instance.classes()) {
    ColourClass out(cls.colour());
    for (std::size_t i = 0; i < cls.clique_count(); ++i) {
      kept.clear();
      for (Vertex v : cls.clique(i))
        if (keep.contains(v)) kept.push_back(v);
      if (kept.size() >= 2) out.add_clique(kept);
    }
    classes.push_back(std::move(out));
  }
  return Instance(instance.colour_count(), instance.vertex_count(), std::move(classes));
}

std::size_t trivial_upper_bound(const Instance& instance) {
  return std::min(instance.colour_count(), instance.vertex_count() / 2);
}

}  // namespace rainbow
