#include "rainbow/stress.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "rainbow/io.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

RandomSpec stress_trial_spec(std::size_t n, std::size_t v, std::size_t max_multiplicity, std::uint64_t seed,
                             std::size_t index) {
  RandomSpec spec;
  spec.n = n;
  spec.v = v;
  spec.max_multiplicity = max_multiplicity;
  spec.seed = derive_seed(seed, index);
  Rng rng(spec.seed ^ 0x7472696672616374ULL);
  spec.triangle_fraction = rng.uniform();
  return spec;
}

Json to_json(const StressFailure& failure) {
  return {{"rng", std::string(kRngAlgorithm)},
          {"spec",
           {{"kind", failure.kind},
            {"n", failure.spec.n},
            {"v", failure.spec.v},
            {"max_multiplicity", failure.spec.max_multiplicity},
            {"triangle_fraction", failure.spec.triangle_fraction},
            {"master_seed", failure.master_seed}}},
          {"seed", failure.spec.seed},
          {"trial", failure.trial},
          {"instance", to_json(failure.instance)},
          {"certificate", to_json(failure.certificate)}};
}

StressReport stress_conjecture(std::size_t n, std::size_t v, std::size_t trials, std::size_t max_multiplicity,
                               std::uint64_t seed, const StressOptions& options) {
  options.budget.check();
  StressReport report;
  report.n = n;
  report.v = v;
  report.max_multiplicity = max_multiplicity;
  report.seed = seed;
  const std::size_t offset = options.include_extremal ? 1 : 0;
  report.trials = trials + offset;
  if (report.trials == 0) return report;

  // Fail fast on an infeasible spec before spawning workers.
  if (trials > 0) (void)gen_random(stress_trial_spec(n, v, max_multiplicity, seed, 0));

  std::vector<std::optional<StressFailure>> outcome(report.trials);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const std::size_t trial = next.fetch_add(1);
      if (trial >= report.trials) return;
      try {
        StressFailure f;
        f.trial = trial;
        f.master_seed = seed;
        if (trial < offset) {
          f.kind = "extremal";
          f.spec = RandomSpec{n, 3 * (n - 1), n, 1.0, seed, 0};
          f.instance = gen_triangle_extremal(n);
        } else {
          f.kind = "random";
          f.spec = stress_trial_spec(n, v, max_multiplicity, seed, trial - offset);
          f.instance = gen_random(f.spec);
        }
        SolverBudget budget = options.budget;
        budget.target = n;
        f.certificate = exact_max(f.instance, budget);
        if (f.certificate.best.size() >= n) continue;
        if (options.replay_dir)
          write_file(*options.replay_dir / ("failure-" + std::to_string(trial) + ".json"), to_json(f).dump(2) + "\n");
        outcome[trial] = std::move(f);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(report.trials);
      }
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, report.trials));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  for (auto& o : outcome)
    if (o) report.failures.push_back(std::move(*o));
  report.successes = report.trials - report.failures.size();
  return report;
}

}  // namespace rainbow
