// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"
#include "rainbow/audit.hpp"
#include "rainbow/auxiliary.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/horns.hpp"
#include "rainbow/io.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/solvers.hpp"
#include "rainbow/stress.hpp"

using namespace rainbow;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "rainbow_acceptance";
  fs::create_directories(dir);
  return dir;
}

Outcome extremal_lower_bound() {
  Outcome o;
  for (std::size_t n = 2; n <= 8; ++n) {
    const SolveResult r = exact_max(gen_triangle_extremal(n));
    if (!r.optimal || r.best.size() != n - 1)
      o.fail("n=" + std::to_string(n) + " gave size " + std::to_string(r.best.size()));
  }
  if (o.pass) o.detail = "n=2..8 proved optimal at n-1";
  return o;
}

Outcome double_k4() {
  Outcome o;
  const SolveResult r = exact_max(gen_double_k4());
  if (!r.optimal || r.best.size() != 2) o.fail("size " + std::to_string(r.best.size()));
  if (oracle::max_rainbow(gen_double_k4()) != 2) o.fail("oracle disagrees");
  if (o.pass) o.detail = "size 2 proved optimal";
  return o;
}

Outcome greedy_theorem() {
  Outcome o;
  std::size_t trials = 0;
  for (std::uint64_t seed = 0; seed < 520; ++seed) {
    Rng knobs(derive_seed(3, seed));
    RandomSpec spec;
    spec.n = 4 + seed % 4;
    spec.v = 4 * spec.n - 3 + knobs.below(3);
    spec.max_multiplicity = 1 + knobs.below(spec.n);
    spec.triangle_fraction = knobs.uniform();
    spec.vertex_count = spec.v + knobs.below(2 * spec.n);
    spec.seed = seed;
    Instance g;
    try {
      g = gen_random(spec);
    } catch (const InfeasibleSpec&) {
      spec.max_multiplicity = spec.n;
      g = gen_random(spec);
    }
    ++trials;
    if (g.min_cover() < 4 * spec.n - 3) o.fail("cover below 4n-3 at seed " + std::to_string(seed));
    const RainbowMatching m = greedy_extend(g, {});
    if (m.size() != spec.n || !oracle::is_rainbow(g, m))
      o.fail("seed " + std::to_string(seed) + " reached " + std::to_string(m.size()));
  }
  if (o.pass) o.detail = std::to_string(trials) + " instances, n=4..7, all reached n";
  return o;
}

Outcome conjecture_stress() {
  Outcome o;
  std::ostringstream detail;
  const fs::path replays = work_dir() / "counterexamples";
  for (std::size_t n : {4, 5, 6}) {
    StressOptions options;
    options.replay_dir = replays;
    const StressReport r = stress_conjecture(n, 3 * n - 2, 200, n, 1000 + n, options);
    detail << "n=" << n << " " << r.successes << "/" << r.trials << " ";
    if (!r.failures.empty())
      o.fail("n=" + std::to_string(n) + ": " + std::to_string(r.failures.size()) +
             " counterexample candidates saved under " + replays.string() + " (exit code 2 path)");
  }
  if (o.pass) o.detail = detail.str() + "reached size n";
  return o;
}

struct TriangleCase {
  std::size_t vertex_count;
  Matching m;
  VertexSet a;
  ColourClass h;
  std::size_t s;
};

// Random (M, A, H, s) satisfying every hypothesis of the extraction lemma.
std::optional<TriangleCase> triangle_case(Rng& rng) {
  const std::size_t msize = 1 + rng.below(6);
  const std::size_t outside = rng.below(9);
  const std::size_t vcount = 2 * msize + outside;
  std::vector<Vertex> labels(vcount);
  for (Vertex v = 0; v < vcount; ++v) labels[v] = v;
  rng.shuffle(std::span<Vertex>(labels));

  TriangleCase tc{vcount, {}, VertexSet(vcount), ColourClass(0), 0};
  for (std::size_t i = 0; i < msize; ++i) tc.m.pairs.emplace_back(labels[2 * i], labels[2 * i + 1]);
  for (std::size_t i = 0; i < msize; ++i)
    if (rng.bernoulli(0.4)) tc.a.insert(rng.bernoulli(0.5) ? tc.m.pairs[i].a : tc.m.pairs[i].b);

  std::vector<Vertex> s_side, o_side;
  for (Vertex v = 0; v < vcount; ++v) {
    const bool in_m = std::any_of(tc.m.pairs.begin(), tc.m.pairs.end(), [v](EdgePair p) { return p.touches(v); });
    (in_m && !tc.a.contains(v) ? s_side : o_side).push_back(v);
  }
  rng.shuffle(std::span<Vertex>(s_side));
  rng.shuffle(std::span<Vertex>(o_side));
  std::size_t pos = 0, next_o = 0;
  while (pos < s_side.size()) {
    const std::size_t take = std::min<std::size_t>(1 + rng.below(2), s_side.size() - pos);
    std::vector<Vertex> clique(s_side.begin() + static_cast<std::ptrdiff_t>(pos),
                               s_side.begin() + static_cast<std::ptrdiff_t>(pos + take));
    pos += take;
    if (next_o < o_side.size() && (take == 1 || rng.bernoulli(0.7))) clique.push_back(o_side[next_o++]);
    if (clique.size() >= 2 && rng.bernoulli(0.95)) tc.h.add_clique(clique);
  }
  if (tc.h.cover() < 2 * msize + 1) return std::nullopt;
  tc.s = 1 + rng.below(tc.h.cover() - 2 * msize);
  return tc;
}

Outcome triangle_extraction() {
  Outcome o;
  Rng rng(2024);
  std::size_t cases = 0, attempts = 0;
  while (cases < 320 && attempts < 200000) {
    ++attempts;
    auto tc = triangle_case(rng);
    if (!tc) continue;
    ++cases;
    Matching got;
    try {
      got = extract_matching_triangles(tc->vertex_count, tc->m, tc->a, tc->h, tc->s);
    } catch (const std::exception& e) {
      o.fail(std::string("case ") + std::to_string(cases) + " threw: " + e.what());
      continue;
    }
    // Brute-force maximum over H edges between the two sides.
    std::vector<bool> in_m(tc->vertex_count, false), in_ma(tc->vertex_count, false);
    for (const auto& p : tc->m.pairs) in_m[p.a] = in_m[p.b] = true;
    for (Vertex x : tc->a.members()) in_ma[tc->m.partner(x)] = true;
    auto inner = [&](Vertex v) { return in_m[v] && !tc->a.contains(v) && !in_ma[v]; };
    auto outer = [&](Vertex v) { return tc->a.contains(v) || !in_m[v]; };
    std::vector<EdgePair> allowed;
    for (const auto& q : tc->h.cliques())
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
          if ((inner(q[i]) && outer(q[j])) || (inner(q[j]) && outer(q[i]))) allowed.emplace_back(q[i], q[j]);
    const std::size_t best = oracle::max_matching(allowed);

    bool ok = got.size() >= tc->s && got.size() == best && is_vertex_disjoint(got.pairs);
    for (const auto& p : got.pairs)
      ok = ok && std::find(allowed.begin(), allowed.end(), p) != allowed.end();
    if (!ok)
      o.fail("case " + std::to_string(cases) + ": size " + std::to_string(got.size()) + ", brute force " +
             std::to_string(best) + ", s " + std::to_string(tc->s));
  }
  if (cases < 300) o.fail("only " + std::to_string(cases) + " cases generated");
  if (o.pass) o.detail = std::to_string(cases) + " cases, output equals brute-force maximum >= s";
  return o;
}

// Small instances shared by the horn and auxiliary criteria.
std::vector<Instance> corpus() {
  std::vector<Instance> out;
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(gen_triangle_extremal(n));
  out.push_back(gen_double_k4());
  for (std::size_t n = 2; n <= 4; ++n) out.push_back(gen_latin_bridge(LatinSquare::cyclic(n), 2));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 3 + seed % 4;
    out.push_back(gen_random(RandomSpec{n, 3 * n - 2, n, 0.5, seed, 3 * n - 2 + seed % 3}));
  }
  Rng rng(606);
  for (int i = 0; i < 120; ++i) out.push_back(oracle::random_instance(rng, 3 + rng.below(8), 6 + rng.below(14), 4, 0.9));
  return out;
}

Outcome horn_machinery() {
  Outcome o;
  Rng rng(515);
  std::size_t instances = 0, matchings = 0, holds = 0, checks = 0;
  for (const Instance& g : corpus()) {
    if (g.vertex_count() > 24) continue;
    ++instances;
    const std::size_t n = g.colour_count();
    std::vector<RainbowMatching> ms{exact_max(g).best, oracle::random_maximal(g, rng), oracle::random_rainbow(g, rng)};
    for (const auto& rm : ms) {
      ++matchings;
      const Matching m = rm.matching();
      ColourSet random_set(n);
      for (Colour c = 0; c < n; ++c)
        if (rng.bernoulli(0.6)) random_set.insert(c);
      for (const ColourSet& colours : {ColourSet::all(n), rm.used_colours(n).complement(), random_set}) {
        const HornCensus census = horn_census(g, m, colours);
        if (census.certificates != oracle::horns(g, m, colours))
          o.fail("census differs from brute force on instance " + std::to_string(instances));
        std::size_t top = 0;
        for (Colour c : colours.members()) top = std::max(top, census.c_horn_count(c));
        for (std::size_t k = 1; k <= top; ++k) {
          ColourSet heavy(n);
          for (Colour c : colours.members())
            if (census.c_horn_count(c) >= k) heavy.insert(c);
          const LemmaCheck r = check_horn_counting(g, m, heavy, k);
          ++checks;
          holds += r.verdict == Verdict::Holds;
          if (r.verdict == Verdict::Violation) o.fail("horn counting VIOLATION: " + r.detail);
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
          std::vector<Colour> hc;
          for (Colour c : colours.members())
            if (census.is_c_horn(i, c)) hc.push_back(c);
          for (std::size_t a = 0; a < hc.size(); ++a)
            for (std::size_t b = a + 1; b < hc.size(); ++b)
              for (Colour third : colours.members()) {
                if (third == hc[a] || third == hc[b]) continue;
                const LemmaCheck r =
                    check_observation_horn(g, m, i, ColourSet::of(n, std::vector<Colour>{hc[a], hc[b], third}));
                ++checks;
                holds += r.verdict == Verdict::Holds;
                if (r.verdict == Verdict::Violation) o.fail("observation VIOLATION: " + r.detail);
              }
        }
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(instances) + " instances, " + std::to_string(matchings) + " matchings, " +
               std::to_string(checks) + " lemma checks (" + std::to_string(holds) + " non-vacuous), 0 violations";
  return o;
}

Outcome auxiliary_matchings() {
  Outcome o;
  Rng rng(707);
  std::size_t compared = 0;
  for (const Instance& g : corpus()) {
    if (g.vertex_count() > 20) continue;
    for (const auto& m : {exact_max(g).best, oracle::random_maximal(g, rng)})
      for (std::size_t t = 1; t <= 4; ++t) {
        ++compared;
        const std::size_t brute = oracle::max_bipartite(oracle::aux_candidate_graph(g, m, t));
        if (find_aux_matching(g, m, t).size() != brute) o.fail("aux size differs from brute force");
      }
  }

  std::size_t cases = 0, audited = 0, nonempty = 0, structural = 0;
  while (cases < 500) {
    // Many colours over few vertices leaves plenty of unused colours.
    const Instance g = oracle::random_instance(rng, 9 + rng.below(8), 5 + rng.below(6), 3, 0.9);
    const SolveResult best = exact_max(g);
    if (!best.optimal) continue;
    RainbowMatching m = best.best;
    // Walk to another maximum matching through a random switch.
    const ColourSet used = m.used_colours(g.colour_count());
    std::vector<RainbowMatching> moves;
    for (Colour c = 0; c < g.colour_count(); ++c)
      if (!used.contains(c))
        for (auto& s : colour_switch(g, m, c))
          if (is_maximal(g, s).maximal) moves.push_back(std::move(s));
    if (!moves.empty() && rng.bernoulli(0.5)) m = moves[rng.below(moves.size())];

    const std::size_t t = 5 + rng.below(3);
    const AuxiliaryMatching aux = find_aux_matching(g, m, t);
    const AuxValidation v = validate_aux(g, m, aux);
    ++cases;
    audited += v.audited;
    nonempty += v.audited && aux.size() > 0;
    if (!v.ok()) o.fail("validate_aux: " + v.violations.front().clause + ": " + v.violations.front().detail);
    if (!v.audited) o.fail("audit skipped: " + v.audit_note);

    // Extension-maximal inputs are checked structurally.
    const RainbowMatching em = oracle::random_maximal(g, rng);
    const AuxValidation sv = validate_aux(g, em, find_aux_matching(g, em, 1 + rng.below(7)), false);
    structural += 1;
    if (!sv.ok()) o.fail("structural check failed on extension-maximal input");
  }
  if (o.pass)
    o.detail = std::to_string(compared) + " brute-force comparisons; " + std::to_string(cases) + " maximum-M cases, " +
               std::to_string(audited) + " audited (" + std::to_string(nonempty) + " with nonempty N), " +
               std::to_string(structural) + " structural";
  return o;
}

Outcome latin_bridge() {
  Outcome o;
  const LatinSquare two({{0, 1}, {1, 0}});
  const std::vector<std::pair<LatinSquare, std::size_t>> cases{
      {two, 1}, {LatinSquare::cyclic(3), 3}, {LatinSquare::cyclic(5), 5}};
  for (const auto& [sq, want] : cases) {
    const SolveResult r = exact_max(gen_latin_bridge(sq, 0));
    const std::size_t brute = oracle::max_transversal(sq);
    if (!r.optimal || r.best.size() != want || brute != want)
      o.fail("order " + std::to_string(sq.order()) + ": rainbow " + std::to_string(r.best.size()) + ", brute force " +
             std::to_string(brute) + ", expected " + std::to_string(want));
  }
  if (o.pass) o.detail = "orders 2, 3, 5 give 1, 3, 5 and match permutation brute force";
  return o;
}

Outcome sampling() {
  Outcome o;
  const std::size_t n = 4096;
  const Instance g = gen_random(RandomSpec{n, 3 * n - 2, n, 0.5, 4096, 0});
  std::size_t colour_runs = 0, sparse = 0;
  double chernoff = 0.0;
  std::size_t combined = 0;
  for (std::uint64_t run = 0; run < 50; ++run) {
    SamplingOptions options;
    options.solve = run == 0;
    const SamplingReport r = sampling_experiment(g, derive_seed(9, run), options);
    if (r.p != 0.25) o.fail("p = " + std::to_string(r.p));
    if (r.sqrt_n != 64.0) o.fail("sqrt n = " + std::to_string(r.sqrt_n));
    colour_runs += r.colours.size();
    sparse += r.sparse_count;
    chernoff += r.chernoff_sum;
    if (r.combined) {
      if (!r.combined->valid) o.fail("combined matching invalid");
      combined = r.combined->matching.size();
    }
  }
  const double rate = static_cast<double>(sparse) / static_cast<double>(colour_runs);
  if (rate > 0.05) o.fail("sparse-colour rate " + std::to_string(rate));
  std::ostringstream d;
  d << "p=0.25, " << sparse << "/" << colour_runs << " colour-runs with e_c <= 64 (rate " << rate
    << ", Chernoff estimate " << chernoff / static_cast<double>(colour_runs) << "), combined matching " << combined
    << "/" << n;
  if (o.pass) o.detail = d.str();
  else o.detail += "; " + d.str();
  return o;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

Outcome determinism() {
  Outcome o;
  const fs::path dir = work_dir();
  std::vector<std::string> transcripts;
  for (int pass = 0; pass < 2; ++pass) {
    const fs::path inst = dir / ("det" + std::to_string(pass) + ".inst");
    const fs::path res = dir / ("det" + std::to_string(pass) + ".result");
    std::string t;
    for (const auto& step : std::vector<std::vector<std::string>>{
             {"generate", "random", "--n", "6", "--v", "16", "--seed", "42", "--out", inst.string()},
             {"solve", inst.string(), "--method", "exact", "--out", res.string()},
             {"solve", inst.string(), "--method", "local"},
             {"verify", inst.string(), res.string()},
             {"verify", inst.string(), "--lemmas", "--seed", "42"},
             {"sample", inst.string(), "--seed", "42", "--runs", "2"}}) {
      const CliRun r = cli_run(step);
      t += std::to_string(r.code) + "\n" + r.out;
    }
    t += read_file(inst) + read_file(res);
    transcripts.push_back(t);
  }
  if (transcripts[0] != transcripts[1]) o.fail("generate/solve/verify/sample transcripts differ");

  std::vector<std::string> stress;
  for (const char* jobs : {"1", "4", "1"})
    stress.push_back(cli_run({"stress", "--n", "5", "--v", "12", "--trials", "60", "--seed", "8", "--include-extremal",
                              "--jobs", jobs})
                         .out);
  if (stress[0] != stress[1] || stress[0] != stress[2]) o.fail("stress report depends on --jobs");
  if (o.pass) o.detail = "pipeline transcripts and stress reports byte-identical (jobs 1 and 4)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"extremal lower bound", extremal_lower_bound},
      {"double K4", double_k4},
      {"greedy theorem", greedy_theorem},
      {"conjecture stress", conjecture_stress},
      {"triangle extraction oracle", triangle_extraction},
      {"horn machinery", horn_machinery},
      {"auxiliary matchings", auxiliary_matchings},
      {"Latin bridge", latin_bridge},
      {"sampling experiment", sampling},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s: %s (%.1fs) %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
