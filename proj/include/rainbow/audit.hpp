#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/auxiliary.hpp"
#include "rainbow/horns.hpp"
#include "rainbow/instance.hpp"
#include "rainbow/solvers.hpp"

namespace rainbow {

struct AuxViolation {
  std::string clause;
  std::string detail;
};

struct AuxValidation {
  std::vector<AuxViolation> violations;
  /// The consequence clauses (no free edge, no rainbow horn, v_e edges)
  /// were checked. Requires t >= 5 and a maximum-cardinality M.
  bool audited = false;
  std::string audit_note;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view clause) const;
};

/// Checks every invariant of `aux` against M. When aux.t >= 5 and M is a
/// maximum rainbow matching, also audits, with L = N u (M \ M_N) and
/// allowed colours C0 u C_N:
///   "edge outside L"   no allowed-colour edge avoids V(L);
///   "rainbow horn"     no allowed rainbow horn in L;
///   "stray v_e edge"   every allowed edge v_e z with z outside V(L) has
///                      z = m(x_e) or colour c(e).
/// Pass `m_is_maximum` when known; otherwise exact_max decides within
/// `budget`, and the audit is skipped if it cannot.
AuxValidation validate_aux(const Instance& instance, const RainbowMatching& m, const AuxiliaryMatching& aux,
                           std::optional<bool> m_is_maximum = std::nullopt, const SolverBudget& budget = {});

/// Indices into aux.edges of the edges v_e x_e whose pair v_e m(x_e) lies in
/// at most alpha |C_N| colours of C_N. alpha must be in (0, 1).
std::vector<std::size_t> compute_N_alpha(const Instance& instance, const AuxiliaryMatching& aux, double alpha);

struct VerdictTally {
  std::size_t vacuous = 0;
  std::size_t holds = 0;
  std::size_t violations = 0;

  void add(Verdict v);
};

struct LemmaAuditReport {
  std::uint64_t seed = 0;
  std::size_t maximum_size = 0;
  bool maximum_certified = false;
  std::size_t matchings = 0;
  std::size_t horn_certificates = 0;
  VerdictTally counting;
  VerdictTally observation;
  std::size_t aux_validated = 0;
  std::size_t aux_audited = 0;
  /// Every violated check, with its witness.
  std::vector<std::string> findings;

  bool clean() const { return findings.empty(); }
};

struct LemmaAuditOptions {
  /// Extra maximal matchings from seeded random colour orders.
  std::size_t samples = 4;
  std::vector<std::size_t> thresholds{1, 2, 3, 5, 7, 9};
  /// Observation checks per matching edge.
  std::size_t triples_per_edge = 64;
  SolverBudget budget{};
};

/// Horn census, counting and observation checks, and auxiliary-matching
/// validation over a maximum matching and several seeded maximal ones.
LemmaAuditReport run_lemma_audit(const Instance& instance, std::uint64_t seed, const LemmaAuditOptions& options = {});

}  // namespace rainbow
