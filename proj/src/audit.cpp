#include "rainbow/audit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rainbow/errors.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

bool AuxValidation::has(std::string_view clause) const {
  return std::any_of(violations.begin(), violations.end(), [&](const AuxViolation& v) { return v.clause == clause; });
}

namespace {

void check_structure(const Instance& instance, const RainbowMatching& m, const AuxiliaryMatching& aux,
                     std::vector<AuxViolation>& out) {
  auto report = [&](std::string clause, std::string detail) { out.push_back({std::move(clause), std::move(detail)}); };
  const std::size_t vcount = instance.vertex_count();
  const ColourSet used = m.used_colours(instance.colour_count());
  std::vector<char> in_m(vcount, 0);
  for (const auto& p : m.pairs) in_m[p.a] = in_m[p.b] = 1;

  if (aux.t == 0) report("threshold", "t must be at least 1");
  std::vector<char> m_seen(m.size(), 0);
  std::vector<char> v_seen(vcount, 0);
  for (std::size_t k = 0; k < aux.edges.size(); ++k) {
    const AuxEdge& e = aux.edges[k];
    const std::string at = "aux edge " + std::to_string(k);
    if (e.m_index >= m.size()) {
      report("inconsistent maps", at + ": M-edge index out of range");
      continue;
    }
    if (m_seen[e.m_index]) report("shared M-edge", at + " reuses M-edge " + to_string(m.pairs[e.m_index]));
    m_seen[e.m_index] = 1;
    const EdgePair me = m.pairs[e.m_index];
    if (!me.touches(e.x) || me.other(e.x) != e.m || e.x == e.m)
      report("inconsistent maps", at + ": x_e/m(x_e) do not match M-edge " + to_string(me));
    if (e.colour != m.colours[e.m_index])
      report("inconsistent maps", at + ": colour " + std::to_string(e.colour) + " is not c(e)");
    if (e.v >= vcount) {
      report("inconsistent maps", at + ": v_e out of range");
      continue;
    }
    if (in_m[e.v]) report("N-vertex inside V(M)", at + ": v_e = " + std::to_string(e.v));
    if (v_seen[e.v]) report("N not a matching", at + ": v_e = " + std::to_string(e.v) + " repeated");
    v_seen[e.v] = 1;

    std::vector<Colour> w = e.witnesses;
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end()) report("repeated witness", at);
    w.erase(std::unique(w.begin(), w.end()), w.end());
    if (w.size() < aux.t)
      report("too few witness colours", at + ": " + std::to_string(w.size()) + " < t = " + std::to_string(aux.t));
    for (Colour c : w) {
      if (c >= instance.colour_count()) {
        report("witness colour out of range", at);
        continue;
      }
      if (used.contains(c)) report("witness colour used by M", at + ": colour " + std::to_string(c));
      if (!instance.has_edge(c, e.pair()))
        report("witness colour does not repeat pair", at + ": " + to_string(e.pair()) + " not in colour " +
                                                          std::to_string(c));
    }
  }
}

void audit_consequences(const Instance& instance, const RainbowMatching& m, const AuxiliaryMatching& aux,
                        std::vector<AuxViolation>& out) {
  const std::size_t n = instance.colour_count();
  std::vector<char> touched(m.size(), 0);
  for (const auto& e : aux.edges) touched[e.m_index] = 1;

  Matching l = aux.n_matching();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!touched[i]) l.pairs.push_back(m.pairs[i]);
  std::vector<char> in_l(instance.vertex_count(), 0);
  for (const auto& p : l.pairs) in_l[p.a] = in_l[p.b] = 1;

  ColourSet allowed = m.used_colours(n).complement() | aux.c_n(n);

  for (Colour c : allowed.members())
    if (auto p = first_free_pair(instance, c, in_l))
      out.push_back({"edge outside L", to_string(ColouredEdge{c, *p}) + " avoids N u (M \\ M_N)"});

  const HornCensus census = horn_census(instance, l, allowed);
  if (auto horn = census.first_rainbow()) out.push_back({"rainbow horn", to_string(*horn)});

  for (const auto& e : aux.edges)
    for (Colour d : allowed.members()) {
      if (d == e.colour) continue;
      for (Vertex z : instance.clique_containing(d, e.v))
        if (z != e.v && !in_l[z] && z != e.m)
          out.push_back({"stray v_e edge", to_string(ColouredEdge{d, EdgePair(e.v, z)}) + " at v_e of " +
                                               to_string(m.pairs[e.m_index])});
    }
}

}  // namespace

AuxValidation validate_aux(const Instance& instance, const RainbowMatching& m, const AuxiliaryMatching& aux,
                           std::optional<bool> m_is_maximum, const SolverBudget& budget) {
  AuxValidation result;
  if (!instance.valid()) {
    result.violations.push_back({"invalid instance", instance.violations().front().message()});
    return result;
  }
  if (auto check = verify_rainbow(instance, m); !check) {
    result.violations.push_back({"M not rainbow", check.violation});
    return result;
  }
  check_structure(instance, m, aux, result.violations);
  if (!result.ok()) {
    result.audit_note = "structure violated";
    return result;
  }
  if (aux.t < 5) {
    result.audit_note = "t < 5";
    return result;
  }
  if (!m_is_maximum) {
    SolverBudget b = budget;
    b.target = m.size() + 1;
    const SolveResult solved = exact_max(instance, b);
    if (solved.best.size() > m.size()) m_is_maximum = false;
    else if (solved.optimal) m_is_maximum = true;
  }
  if (!m_is_maximum) {
    result.audit_note = "maximality of M undecided within budget";
    return result;
  }
  if (!*m_is_maximum) {
    result.audit_note = "M is not maximum";
    return result;
  }
  result.audited = true;
  audit_consequences(instance, m, aux, result.violations);
  return result;
}

std::vector<std::size_t> compute_N_alpha(const Instance& instance, const AuxiliaryMatching& aux, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  const ColourSet c_n = aux.c_n(instance.colour_count());
  const double cap = alpha * static_cast<double>(c_n.size());
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < aux.edges.size(); ++k) {
    const AuxEdge& e = aux.edges[k];
    if (static_cast<double>(pair_multiplicity(instance, EdgePair(e.v, e.m), c_n)) <= cap) out.push_back(k);
  }
  return out;
}

void VerdictTally::add(Verdict v) {
  switch (v) {
    case Verdict::Vacuous: ++vacuous; break;
    case Verdict::Holds: ++holds; break;
    case Verdict::Violation: ++violations; break;
  }
}

namespace {

RainbowMatching greedy_in_order(const Instance& instance, std::span<const Colour> order) {
  std::vector<char> blocked(instance.vertex_count(), 0);
  RainbowMatching m;
  for (Colour c : order)
    if (auto p = first_free_pair(instance, c, blocked)) {
      m.add(*p, c);
      blocked[p->a] = blocked[p->b] = 1;
    }
  return m;
}

void audit_horns(const Instance& instance, const RainbowMatching& m, const LemmaAuditOptions& options,
                 LemmaAuditReport& report) {
  const std::size_t n = instance.colour_count();
  const Matching plain = m.matching();
  const std::string where = " on matching of size " + std::to_string(m.size());
  for (const ColourSet& colours : {m.used_colours(n).complement(), ColourSet::all(n)}) {
    const HornCensus census = horn_census(instance, plain, colours);
    report.horn_certificates += census.certificates.size();

    std::size_t top = 0;
    for (Colour c : colours.members()) top = std::max(top, census.c_horn_count(c));
    for (std::size_t k = 1; k <= top; ++k) {
      ColourSet heavy(n);
      for (Colour c : colours.members())
        if (census.c_horn_count(c) >= k) heavy.insert(c);
      const LemmaCheck check = check_horn_counting(instance, plain, heavy, k);
      report.counting.add(check.verdict);
      if (check.verdict == Verdict::Violation) report.findings.push_back("horn counting k=" + std::to_string(k) + where + ": " + check.detail);
    }

    for (std::size_t i = 0; i < m.size(); ++i) {
      std::vector<Colour> horns;
      for (Colour c : colours.members())
        if (census.is_c_horn(i, c)) horns.push_back(c);
      std::size_t done = 0;
      for (std::size_t a = 0; a < horns.size() && done < options.triples_per_edge; ++a)
        for (std::size_t b = a + 1; b < horns.size() && done < options.triples_per_edge; ++b)
          for (Colour third : colours.members()) {
            if (third == horns[a] || third == horns[b]) continue;
            if (done++ >= options.triples_per_edge) break;
            const LemmaCheck check =
                check_observation_horn(instance, plain, i, ColourSet::of(n, std::vector<Colour>{horns[a], horns[b], third}));
            report.observation.add(check.verdict);
            if (check.verdict == Verdict::Violation)
              report.findings.push_back("observation at " + to_string(m.pairs[i]) + where + ": " + check.detail);
          }
    }
  }
}

}  // namespace

LemmaAuditReport run_lemma_audit(const Instance& instance, std::uint64_t seed, const LemmaAuditOptions& options) {
  if (!instance.valid())
    throw PreconditionError("lemma audit requires a valid instance: " + instance.violations().front().message());
  LemmaAuditReport report;
  report.seed = seed;

  const SolveResult best = exact_max(instance, options.budget);
  report.maximum_size = best.best.size();
  report.maximum_certified = best.optimal;

  std::vector<RainbowMatching> matchings{best.best};
  if (!is_maximal(instance, best.best).maximal) matchings.front() = greedy_extend(instance, best.best);
  std::vector<Colour> order(instance.colour_count());
  std::iota(order.begin(), order.end(), Colour{0});
  for (std::size_t s = 0; s < options.samples; ++s) {
    Rng rng(derive_seed(seed, s));
    rng.shuffle(std::span<Colour>(order));
    matchings.push_back(greedy_in_order(instance, order));
  }

  for (const auto& m : matchings) {
    ++report.matchings;
    audit_horns(instance, m, options, report);
    // Uncertified matchings skip the consequence audit instead of re-solving.
    const bool maximum = report.maximum_certified && m.size() == report.maximum_size;
    for (std::size_t t : options.thresholds) {
      const AuxiliaryMatching aux = find_aux_matching(instance, m, t);
      const AuxValidation v = validate_aux(instance, m, aux, maximum, options.budget);
      ++report.aux_validated;
      if (v.audited) ++report.aux_audited;
      for (const auto& bad : v.violations)
        report.findings.push_back("auxiliary t=" + std::to_string(t) + " on matching of size " +
                                  std::to_string(m.size()) + ": " + bad.clause + ": " + bad.detail);
    }
  }
  return report;
}

}  // namespace rainbow
