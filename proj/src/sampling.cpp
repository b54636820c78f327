#include "rainbow/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rainbow/errors.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

double chernoff_bound(double expectation, double k, double eps) {
  if (!(expectation >= 0.0) || !std::isfinite(expectation)) throw std::invalid_argument("expectation must be >= 0");
  if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("summand bound k must be > 0");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  return 2.0 * std::exp(-eps * eps * expectation / (3.0 * k * k));
}

double sampling_probability(std::size_t n) {
  if (n == 0) throw std::invalid_argument("sampling probability needs n >= 1");
  return std::min(1.0, 2.0 * std::pow(static_cast<double>(n), -0.25));
}

namespace {

std::size_t choose2(std::size_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

}  // namespace

SamplingReport sampling_experiment(const Instance& instance, std::uint64_t seed, const SamplingOptions& options) {
  if (!instance.valid())
    throw PreconditionError("sampling_experiment requires a valid instance: " + instance.violations().front().message());
  SamplingReport report;
  report.n = instance.colour_count();
  report.vertex_count = instance.vertex_count();
  report.seed = seed;
  report.p = sampling_probability(report.n);
  report.sqrt_n = std::sqrt(static_cast<double>(report.n));
  report.cover_floor = std::max(0.0, (1.0 - 6.0 * report.p) * static_cast<double>(instance.min_cover()));

  Rng rng(seed);
  VertexSet in_s(instance.vertex_count());
  for (Vertex v = 0; v < instance.vertex_count(); ++v)
    if (rng.bernoulli(report.p)) {
      in_s.insert(v);
      report.sample.push_back(v);
    }

  const double p2 = report.p * report.p;
  for (const ColourClass& cls : instance.classes()) {
    ColourSample cs;
    std::size_t pairs = 0;
    std::size_t largest = 1;
    for (std::size_t i = 0; i < cls.clique_count(); ++i) {
      const auto clique = cls.clique(i);
      const std::size_t inside = static_cast<std::size_t>(
          std::count_if(clique.begin(), clique.end(), [&](Vertex v) { return in_s.contains(v); }));
      cs.e_c += choose2(inside);
      cs.v_c += inside;
      pairs += choose2(clique.size());
      largest = std::max(largest, choose2(clique.size()));
      if (clique.size() - inside >= 2) cs.survivor_cover += clique.size() - inside;
    }
    cs.expected_e_c = p2 * static_cast<double>(pairs);
    if (cs.expected_e_c > report.sqrt_n)
      cs.chernoff = std::min(1.0, chernoff_bound(cs.expected_e_c, static_cast<double>(largest),
                                                 1.0 - report.sqrt_n / cs.expected_e_c));
    cs.conservative_cover = cls.cover() > 3 * cs.v_c ? cls.cover() - 3 * cs.v_c : 0;
    cs.sparse = static_cast<double>(cs.e_c) <= report.sqrt_n;
    cs.cover_dropped = static_cast<double>(cs.survivor_cover) < report.cover_floor;
    report.sparse_count += cs.sparse ? 1 : 0;
    report.cover_drop_count += cs.cover_dropped ? 1 : 0;
    report.chernoff_sum += cs.chernoff;
    report.colours.push_back(cs);
  }

  if (options.solve) {
    const Instance outer = restrict_to(instance, in_s.complement());
    const SolveResult solved = local_search(outer, options.budget);
    CombinedSolve combined;
    combined.outer_size = solved.best.size();
    combined.outer_reason = solved.reason;
    combined.matching = solved.best;

    std::vector<char> blocked(instance.vertex_count(), 1);
    for (Vertex v : report.sample) blocked[v] = 0;
    const ColourSet used = solved.best.used_colours(instance.colour_count());
    for (Colour c = 0; c < instance.colour_count(); ++c) {
      if (used.contains(c)) continue;
      if (auto p = first_free_pair(instance, c, blocked)) {
        combined.matching.add(*p, c);
        blocked[p->a] = blocked[p->b] = 1;
        ++combined.inner_size;
      }
    }
    combined.valid = verify_rainbow(instance, combined.matching).ok;
    report.combined = std::move(combined);
  }
  return report;
}

}  // namespace rainbow
