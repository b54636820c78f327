#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/instance.hpp"

namespace rainbow {

enum class HornKind { Mono, Rainbow };

std::string_view to_string(HornKind kind);

/// Edge e = matching.pairs[edge] with disjoint witnesses e1 (from e.a) and
/// e2 (from e.b) into the unmatched vertices.
struct HornCertificate {
  std::size_t edge = 0;
  EdgePair e;
  EdgePair e1;
  Colour c1 = 0;
  EdgePair e2;
  Colour c2 = 0;

  HornKind kind() const { return c1 == c2 ? HornKind::Mono : HornKind::Rainbow; }

  friend bool operator==(const HornCertificate&, const HornCertificate&) = default;
};

std::string to_string(const HornCertificate& horn);

/// Every horn of a matching restricted to a colour set.
struct HornCensus {
  std::size_t colour_count = 0;
  /// Ordered by edge index, then (c1, e1), then (c2, e2).
  std::vector<HornCertificate> certificates;
  /// mono[i * colour_count + c]: number of c-horn certificates at edge i.
  std::vector<std::size_t> mono;
  /// rainbow_at[i]: number of rainbow certificates at edge i.
  std::vector<std::size_t> rainbow_at;

  std::size_t edge_count() const { return rainbow_at.size(); }
  bool is_c_horn(std::size_t edge, Colour c) const { return mono[edge * colour_count + c] > 0; }
  /// Number of edges that are c-horns.
  std::size_t c_horn_count(Colour c) const;
  bool has_rainbow_horn() const;
  std::optional<HornCertificate> first_rainbow(std::optional<std::size_t> edge = std::nullopt) const;
};

/// Exhaustive horn enumeration for `matching` with colours in `colours`;
/// the unmatched vertices are V \ V(matching). Throws PreconditionError when
/// the matching is not vertex-disjoint or out of range.
HornCensus horn_census(const Instance& instance, const Matching& matching, const ColourSet& colours);

enum class Verdict { Vacuous, Holds, Violation };

std::string_view to_string(Verdict verdict);

struct LemmaCheck {
  Verdict verdict = Verdict::Vacuous;
  std::string detail;
  std::optional<HornCertificate> witness;
};

/// If every colour of C has at least k c-horns in N and k|C| > 2|N|, a
/// C-rainbow horn must exist. Vacuous when the hypothesis fails.
LemmaCheck check_horn_counting(const Instance& instance, const Matching& n, const ColourSet& colours, std::size_t k);

/// If e = m.pairs[edge] is a c-horn for two colours of the three-colour set
/// C and some edge of the third colour joins e to the unmatched vertices,
/// e must be a C-rainbow horn. Vacuous when the hypothesis fails.
LemmaCheck check_observation_horn(const Instance& instance, const Matching& m, std::size_t edge,
                                  const ColourSet& colours);

}  // namespace rainbow
