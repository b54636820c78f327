#include "rainbow/horns.hpp"

#include <algorithm>

#include "rainbow/errors.hpp"

namespace rainbow {

std::string_view to_string(HornKind kind) { return kind == HornKind::Mono ? "c-horn" : "rainbow-horn"; }

std::string to_string(const HornCertificate& horn) {
  return "horn at " + to_string(horn.e) + ": " + to_string(horn.e1) + ":" + std::to_string(horn.c1) + " " +
         to_string(horn.e2) + ":" + std::to_string(horn.c2);
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Vacuous: return "vacuous";
    case Verdict::Holds: return "holds";
    case Verdict::Violation: return "VIOLATION";
  }
  return "VIOLATION";
}

std::size_t HornCensus::c_horn_count(Colour c) const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < edge_count(); ++i) count += is_c_horn(i, c) ? 1 : 0;
  return count;
}

bool HornCensus::has_rainbow_horn() const {
  return std::any_of(rainbow_at.begin(), rainbow_at.end(), [](std::size_t k) { return k > 0; });
}

std::optional<HornCertificate> HornCensus::first_rainbow(std::optional<std::size_t> edge) const {
  for (const auto& h : certificates)
    if (h.kind() == HornKind::Rainbow && (!edge || h.edge == *edge)) return h;
  return std::nullopt;
}

namespace {

struct Spoke {
  Colour colour;
  Vertex z;
};

// Coloured edges from x to unmatched vertices, ordered by (colour, z).
std::vector<Spoke> spokes(const Instance& instance, Vertex x, std::span<const char> matched, const ColourSet& colours) {
  std::vector<Spoke> out;
  for (Colour c = 0; c < instance.colour_count(); ++c) {
    if (!colours.contains(c)) continue;
    for (Vertex z : instance.clique_containing(c, x))
      if (!matched[z]) out.push_back({c, z});
  }
  return out;
}

}  // namespace

HornCensus horn_census(const Instance& instance, const Matching& matching, const ColourSet& colours) {
  if (!instance.valid())
    throw PreconditionError("horn_census requires a valid instance: " + instance.violations().front().message());
  std::vector<char> matched(instance.vertex_count(), 0);
  for (const auto& p : matching.pairs) {
    if (p.a == p.b) throw PreconditionError("horn_census: degenerate pair " + to_string(p));
    if (p.b >= instance.vertex_count()) throw PreconditionError("horn_census: vertex out of range in " + to_string(p));
  }
  if (!is_vertex_disjoint(matching.pairs)) throw PreconditionError("horn_census: pairs share a vertex");
  for (const auto& p : matching.pairs) matched[p.a] = matched[p.b] = 1;

  HornCensus census;
  census.colour_count = instance.colour_count();
  census.mono.assign(matching.size() * instance.colour_count(), 0);
  census.rainbow_at.assign(matching.size(), 0);
  for (std::size_t i = 0; i < matching.size(); ++i) {
    const EdgePair e = matching.pairs[i];
    const auto from_a = spokes(instance, e.a, matched, colours);
    const auto from_b = spokes(instance, e.b, matched, colours);
    for (const Spoke& s1 : from_a)
      for (const Spoke& s2 : from_b) {
        if (s1.z == s2.z) continue;
        census.certificates.push_back({i, e, EdgePair(e.a, s1.z), s1.colour, EdgePair(e.b, s2.z), s2.colour});
        if (s1.colour == s2.colour) ++census.mono[i * census.colour_count + s1.colour];
        else ++census.rainbow_at[i];
      }
  }
  return census;
}

LemmaCheck check_horn_counting(const Instance& instance, const Matching& n, const ColourSet& colours, std::size_t k) {
  LemmaCheck out;
  if (k * colours.size() <= 2 * n.size()) {
    out.detail = "k|C| = " + std::to_string(k * colours.size()) + " <= 2|N| = " + std::to_string(2 * n.size());
    return out;
  }
  const HornCensus census = horn_census(instance, n, colours);
  for (Colour c : colours.members()) {
    if (const std::size_t have = census.c_horn_count(c); have < k) {
      out.detail = "colour " + std::to_string(c) + " has " + std::to_string(have) + " c-horns, fewer than k";
      return out;
    }
  }
  if (auto horn = census.first_rainbow()) {
    out.verdict = Verdict::Holds;
    out.detail = to_string(*horn);
    out.witness = horn;
    return out;
  }
  out.verdict = Verdict::Violation;
  out.detail = "hypothesis holds but no rainbow horn exists";
  return out;
}

LemmaCheck check_observation_horn(const Instance& instance, const Matching& m, std::size_t edge,
                                  const ColourSet& colours) {
  if (edge >= m.size()) throw PreconditionError("check_observation_horn: edge index out of range");
  if (colours.size() != 3) throw PreconditionError("check_observation_horn: colour set must have three colours");
  LemmaCheck out;
  const HornCensus census = horn_census(instance, m, colours);
  const EdgePair e = m.pairs[edge];
  std::vector<char> matched(instance.vertex_count(), 0);
  for (const auto& p : m.pairs) matched[p.a] = matched[p.b] = 1;

  auto touches_outside = [&](Colour c) {
    for (Vertex x : {e.a, e.b})
      for (Vertex z : instance.clique_containing(c, x))
        if (!matched[z]) return true;
    return false;
  };

  const auto cs = colours.members();
  bool hypothesis = false;
  for (std::size_t third = 0; third < 3 && !hypothesis; ++third) {
    const Colour c1 = cs[(third + 1) % 3], c2 = cs[(third + 2) % 3];
    hypothesis = census.is_c_horn(edge, c1) && census.is_c_horn(edge, c2) && touches_outside(cs[third]);
  }
  if (!hypothesis) {
    out.detail = "edge " + to_string(e) + " is not a c-horn for two colours with a third-colour edge";
    return out;
  }
  if (auto horn = census.first_rainbow(edge)) {
    out.verdict = Verdict::Holds;
    out.detail = to_string(*horn);
    out.witness = horn;
    return out;
  }
  out.verdict = Verdict::Violation;
  out.detail = "edge " + to_string(e) + " meets the hypothesis but is not a rainbow horn";
  return out;
}

}  // namespace rainbow
