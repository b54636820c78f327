#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>

#include "rainbow/audit.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/io.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/solvers.hpp"
#include "rainbow/stress.hpp"

namespace rainbow::cli {

namespace {

namespace fs = std::filesystem;

struct GenerateArgs {
  std::string kind;
  std::size_t n = 4;
  std::size_t v = 0;
  std::size_t max_mult = 0;
  double triangle_fraction = 0.5;
  std::size_t vertex_count = 0;
  std::optional<std::uint64_t> seed;
  std::string square;
  std::size_t c = 0;
  std::string out;
};

struct BudgetArgs {
  std::optional<std::size_t> target;
  std::uint64_t node_limit = SolverBudget{}.node_limit;
  double time_limit = SolverBudget{}.time_limit;

  SolverBudget budget() const {
    SolverBudget b;
    b.node_limit = node_limit;
    b.time_limit = time_limit;
    b.target = target;
    b.check();
    return b;
  }
};

void add_budget_flags(CLI::App* cmd, BudgetArgs& b, bool with_target) {
  if (with_target) cmd->add_option("--target", b.target, "Stop once a matching of this size is found");
  cmd->add_option("--node-limit", b.node_limit, "Search node budget")->check(CLI::PositiveNumber);
  cmd->add_option("--time-limit", b.time_limit, "Wall-clock budget in seconds")->check(CLI::PositiveNumber);
}

std::string summary(const Instance& instance) {
  return "n=" + std::to_string(instance.colour_count()) + " vertex_count=" + std::to_string(instance.vertex_count()) +
         " min_cover=" + std::to_string(instance.min_cover()) +
         " max_multiplicity=" + std::to_string(max_multiplicity(instance));
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

LatinSquare load_square(const std::string& path, std::ostream& err) {
  ParsedSquare parsed = parse_latin_square(read_file(path));
  if (parsed.one_based) err << "note: " << path << " uses symbols 1..n; shifted to 0..n-1\n";
  return std::move(parsed.square);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) out << text;
  else write_file(path, text);
}

int exit_for(SolveReason reason) { return reason == SolveReason::BudgetExhausted ? kBudgetExhausted : kOk; }

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  Instance instance;
  if (a.kind == "triangle-extremal") {
    instance = gen_triangle_extremal(a.n);
  } else if (a.kind == "double-k4") {
    instance = gen_double_k4();
  } else if (a.kind == "latin-bridge") {
    if (a.square.empty()) throw std::invalid_argument("latin-bridge needs --square");
    instance = gen_latin_bridge(load_square(a.square, err), a.c);
  } else {
    if (!a.seed) throw std::invalid_argument("random generation needs an explicit --seed");
    if (a.v == 0) throw std::invalid_argument("random generation needs --v");
    RandomSpec spec;
    spec.n = a.n;
    spec.v = a.v;
    spec.max_multiplicity = a.max_mult ? a.max_mult : a.n;
    spec.triangle_fraction = a.triangle_fraction;
    spec.seed = *a.seed;
    spec.vertex_count = a.vertex_count;
    instance = gen_random(spec);
  }
  const std::string text = serialize_instance(instance);
  if (a.out.empty()) {
    out << text;
    err << summary(instance) << "\n";
  } else {
    write_file(a.out, text);
    out << summary(instance) << "\n";
  }
  return kOk;
}

SolveResult solve_with(const Instance& instance, const std::string& method, const SolverBudget& budget) {
  if (method == "exact") return exact_max(instance, budget);
  if (method == "local") return local_search(instance, budget);
  SolveResult r;
  r.best = greedy_extend(instance, RainbowMatching{});
  r.optimal = r.best.size() == trivial_upper_bound(instance);
  if (budget.target && r.best.size() >= *budget.target) r.reason = SolveReason::TargetReached;
  else if (r.optimal) r.reason = SolveReason::ProvedOptimal;
  else r.reason = SolveReason::BudgetExhausted;
  return r;
}

std::string result_line(const SolveResult& r) {
  return "size=" + std::to_string(r.best.size()) + " optimal=" + (r.optimal ? "true" : "false") +
         " nodes=" + std::to_string(r.nodes_explored) + " reason=" + std::string(to_string(r.reason));
}

int cmd_solve(const std::string& path, const std::string& method, const BudgetArgs& b, const std::string& out_path,
              std::ostream& out) {
  const Instance instance = load_instance(path);
  const SolveResult r = solve_with(instance, method, b.budget());
  out << result_line(r) << "\n" << to_json(r.best).dump() << "\n";
  if (!out_path.empty()) write_file(out_path, to_json(r).dump() + "\n");
  return exit_for(r.reason);
}

int cmd_verify(const std::string& path, const std::string& matching_path, bool lemmas,
               std::optional<std::uint64_t> seed, const BudgetArgs& b, std::ostream& out) {
  const Instance instance = load_instance(path);
  if (lemmas) {
    if (!seed) throw std::invalid_argument("--lemmas needs an explicit --seed");
    LemmaAuditOptions options;
    options.budget = b.budget();
    const LemmaAuditReport report = run_lemma_audit(instance, *seed, options);
    out << to_json(report).dump() << "\n";
    out << "lemmas=" << (report.clean() ? "pass" : "VIOLATION") << " findings=" << report.findings.size()
        << " aux_audited=" << report.aux_audited << "\n";
    return report.clean() ? kOk : kError;
  }
  if (matching_path.empty()) throw std::invalid_argument("verify needs a matching file or --lemmas");
  const RainbowMatching m = parse_matching(read_file(matching_path));
  const RainbowCheck check = verify_rainbow(instance, m);
  if (!check) {
    out << "valid=false: " << check.violation << "\n";
    return kError;
  }
  const MaximalityCheck mx = is_maximal(instance, m);
  out << "valid=true maximal=" << (mx.maximal ? "true" : "false");
  if (mx.extension) out << " extension=" << to_string(*mx.extension);
  out << "\n";
  return kOk;
}

struct StressArgs {
  std::size_t n = 4;
  std::size_t v = 0;
  std::size_t trials = 0;
  std::size_t max_mult = 0;
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
  std::string replay_dir;
  bool include_extremal = false;
  std::string out;
};

int cmd_stress(const StressArgs& a, const BudgetArgs& b, std::ostream& out) {
  if (!a.seed) throw std::invalid_argument("stress needs an explicit --seed");
  StressOptions options;
  options.jobs = a.jobs;
  options.include_extremal = a.include_extremal;
  if (!a.replay_dir.empty()) options.replay_dir = a.replay_dir;
  options.budget = b.budget();
  const std::size_t v = a.v ? a.v : 3 * a.n - 2;
  const StressReport report =
      stress_conjecture(a.n, v, a.trials, a.max_mult ? a.max_mult : a.n, *a.seed, options);
  const std::string text = to_json(report).dump() + "\n";
  if (!a.out.empty()) write_file(a.out, text);
  else out << text;
  out << "trials=" << report.trials << " successes=" << report.successes << " failures=" << report.failures.size()
      << "\n";
  for (const auto& f : report.failures)
    out << "counterexample-candidate trial=" << f.trial << " kind=" << f.kind << " seed=" << f.spec.seed
        << " best=" << f.certificate.best.size() << " reason=" << to_string(f.certificate.reason) << "\n";
  return report.failures.empty() ? kOk : kCounterexample;
}

struct SampleArgs {
  std::string instance;
  std::optional<std::uint64_t> seed;
  std::size_t runs = 1;
  bool no_solve = false;
  std::string out_dir;
};

int cmd_sample(const SampleArgs& a, const BudgetArgs& b, std::ostream& out) {
  if (!a.seed) throw std::invalid_argument("sample needs an explicit --seed");
  const Instance instance = load_instance(a.instance);
  SamplingOptions options;
  options.solve = !a.no_solve;
  options.budget = b.budget();
  std::size_t colour_runs = 0, sparse = 0, dropped = 0;
  double chernoff = 0.0, p = 0.0;
  for (std::size_t run = 0; run < a.runs; ++run) {
    const SamplingReport report = sampling_experiment(instance, derive_seed(*a.seed, run), options);
    const std::string text = to_json(report).dump() + "\n";
    if (a.out_dir.empty()) out << text;
    else write_file(fs::path(a.out_dir) / ("sample-" + std::to_string(run) + ".json"), text);
    colour_runs += report.n;
    sparse += report.sparse_count;
    dropped += report.cover_drop_count;
    chernoff += report.chernoff_sum;
    p = report.p;
  }
  const double denom = colour_runs ? static_cast<double>(colour_runs) : 1.0;
  out << "runs=" << a.runs << " p=" << p << " sparse_rate=" << static_cast<double>(sparse) / denom
      << " cover_drop_rate=" << static_cast<double>(dropped) / denom << " chernoff_rate=" << chernoff / denom
      << "\n";
  return kOk;
}

int cmd_latin(const std::string& path, std::size_t c, bool solve, const BudgetArgs& b, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  const LatinSquare square = load_square(path, err);
  const Instance instance = gen_latin_bridge(square, c);
  if (!solve) {
    emit(out_path, serialize_instance(instance), out);
    if (!out_path.empty()) out << summary(instance) << "\n";
    return kOk;
  }
  const SolveResult r = exact_max(instance, b.budget());
  const std::size_t n = square.order();
  std::vector<std::string> cells, stars;
  for (std::size_t i = 0; i < r.best.size(); ++i) {
    const EdgePair p = r.best.pairs[i];
    const Colour colour = r.best.colours[i];
    if (p.a < n && p.b >= n && p.b < 2 * n) {
      cells.push_back("(" + std::to_string(p.a) + ", " + std::to_string(p.b - n) + ", " + std::to_string(colour) + ")");
    } else {
      const std::size_t star = (p.a - 2 * n) / (n + 1);
      stars.push_back("star " + std::to_string(star) + " " + to_string(p) + " colour " + std::to_string(colour));
    }
  }
  out << "transversal size=" << r.best.size() << " cells=" << cells.size() << " star_edges=" << stars.size()
      << " optimal=" << (r.optimal ? "true" : "false") << "\n";
  for (const auto& line : cells) out << line << "\n";
  for (const auto& line : stars) out << line << "\n";
  if (!out_path.empty()) write_file(out_path, to_json(r).dump() + "\n");
  return exit_for(r.reason);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow matchings in coloured clique multigraphs", "rainbow"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write an instance");
  generate->add_option("kind", gen.kind, "triangle-extremal | double-k4 | latin-bridge | random")
      ->required()
      ->check(CLI::IsMember({"triangle-extremal", "double-k4", "latin-bridge", "random"}));
  generate->add_option("--n", gen.n, "Number of colours");
  generate->add_option("--v", gen.v, "Minimum cover per colour (random)");
  generate->add_option("--max-mult", gen.max_mult, "Pair multiplicity cap (random; default n)");
  generate->add_option("--triangle-fraction", gen.triangle_fraction, "Triangle probability (random)")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--vertex-count", gen.vertex_count, "Vertex universe (random; default v)");
  generate->add_option("--seed", gen.seed, "Seed (random)");
  generate->add_option("--square", gen.square, "Latin square file (latin-bridge)");
  generate->add_option("--c", gen.c, "Star vertices, even (latin-bridge)");
  generate->add_option("--out", gen.out, "Output file; stdout when omitted");

  std::string solve_path, method = "exact", solve_out;
  BudgetArgs solve_budget;
  auto* solve = app.add_subcommand("solve", "Find a large rainbow matching");
  solve->add_option("instance", solve_path, "Instance file")->required();
  solve->add_option("--method", method, "greedy | exact | local")
      ->check(CLI::IsMember({"greedy", "exact", "local"}));
  add_budget_flags(solve, solve_budget, true);
  solve->add_option("--out", solve_out, "Write the result here as well");

  std::string verify_path, matching_path;
  bool lemmas = false;
  std::optional<std::uint64_t> verify_seed;
  BudgetArgs verify_budget;
  auto* verify = app.add_subcommand("verify", "Check a matching, or audit the lemma suite");
  verify->add_option("instance", verify_path, "Instance file")->required();
  verify->add_option("matching", matching_path, "Matching or solve-result file");
  verify->add_flag("--lemmas", lemmas, "Run horn, counting and auxiliary-matching audits");
  verify->add_option("--seed", verify_seed, "Seed for sampled matchings (--lemmas)");
  add_budget_flags(verify, verify_budget, false);

  StressArgs st;
  BudgetArgs stress_budget;
  auto* stress = app.add_subcommand("stress", "Search random instances for matchings of size n");
  stress->add_option("--n", st.n, "Number of colours")->check(CLI::PositiveNumber);
  stress->add_option("--v", st.v, "Cover per colour (default 3n-2)");
  stress->add_option("--trials", st.trials, "Random trials")->required();
  stress->add_option("--max-mult", st.max_mult, "Pair multiplicity cap (default n)");
  stress->add_option("--seed", st.seed, "Master seed");
  stress->add_option("--jobs", st.jobs, "Worker threads")->check(CLI::PositiveNumber);
  stress->add_option("--replay-dir", st.replay_dir, "Directory for failure replays");
  stress->add_flag("--include-extremal", st.include_extremal, "Add the triangle-extremal instance as trial 0");
  stress->add_option("--out", st.out, "Report file; stdout when omitted");
  add_budget_flags(stress, stress_budget, false);

  SampleArgs sa;
  BudgetArgs sample_budget{std::nullopt, SamplingOptions{}.budget.node_limit, SamplingOptions{}.budget.time_limit};
  auto* sample = app.add_subcommand("sample", "Vertex-sampling experiment");
  sample->add_option("instance", sa.instance, "Instance file")->required();
  sample->add_option("--seed", sa.seed, "Seed");
  sample->add_option("--runs", sa.runs, "Independent runs")->check(CLI::PositiveNumber);
  sample->add_flag("--no-solve", sa.no_solve, "Skip the combined solve");
  sample->add_option("--out-dir", sa.out_dir, "Write sample-<run>.json here; stdout when omitted");
  add_budget_flags(sample, sample_budget, false);

  std::string square_path, latin_out;
  std::size_t latin_c = 0;
  bool latin_solve = false;
  BudgetArgs latin_budget;
  auto* latin = app.add_subcommand("latin", "Latin-square transversals through the rainbow reduction");
  latin->add_option("square", square_path, "Latin square file")->required();
  latin->add_option("--c", latin_c, "Star vertices, even");
  latin->add_flag("--solve", latin_solve, "Solve exactly and list the transversal");
  latin->add_option("--out", latin_out, "Instance (or result with --solve) file");
  add_budget_flags(latin, latin_budget, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, out, err);
    if (solve->parsed()) return cmd_solve(solve_path, method, solve_budget, solve_out, out);
    if (verify->parsed()) return cmd_verify(verify_path, matching_path, lemmas, verify_seed, verify_budget, out);
    if (stress->parsed()) return cmd_stress(st, stress_budget, out);
    if (sample->parsed()) return cmd_sample(sa, sample_budget, out);
    if (latin->parsed()) return cmd_latin(square_path, latin_c, latin_solve, latin_budget, latin_out, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace rainbow::cli
