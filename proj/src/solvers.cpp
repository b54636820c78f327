#include "rainbow/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "rainbow/errors.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

void SolverBudget::check() const {
  if (node_limit == 0) throw std::invalid_argument("solver node limit must be positive");
  if (!(time_limit > 0.0)) throw std::invalid_argument("solver time limit must be positive");
}

std::string_view to_string(SolveReason reason) {
  switch (reason) {
    case SolveReason::ProvedOptimal: return "proved-optimal";
    case SolveReason::TargetReached: return "target-reached";
    case SolveReason::BudgetExhausted: return "budget-exhausted";
  }
  return "budget-exhausted";
}

std::optional<SolveReason> parse_solve_reason(std::string_view text) {
  for (auto r : {SolveReason::ProvedOptimal, SolveReason::TargetReached, SolveReason::BudgetExhausted})
    if (to_string(r) == text) return r;
  return std::nullopt;
}

std::string_view to_string(SteerOutcome outcome) {
  switch (outcome) {
    case SteerOutcome::Reached: return "reached";
    case SteerOutcome::Unreachable: return "unreachable";
    case SteerOutcome::BudgetExhausted: return "budget-exhausted";
  }
  return "budget-exhausted";
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds))) {}
  bool passed() const { return Clock::now() >= end_; }

 private:
  Clock::time_point end_;
};

void require_rainbow(const Instance& instance, const RainbowMatching& m, std::string_view op) {
  if (!instance.valid())
    throw PreconditionError(std::string(op) + " requires a valid instance: " + instance.violations().front().message());
  if (auto check = verify_rainbow(instance, m); !check)
    throw PreconditionError(std::string(op) + ": not a rainbow matching: " + check.violation);
}

void require_maximal(const Instance& instance, const RainbowMatching& m, std::string_view op) {
  require_rainbow(instance, m, op);
  if (auto mx = is_maximal(instance, m); !mx.maximal)
    throw PreconditionError(std::string(op) + ": matching is not maximal, it extends by " + to_string(*mx.extension));
}

std::vector<char> blocked_vertices(const Instance& instance, const RainbowMatching& m) {
  std::vector<char> blocked(instance.vertex_count(), 0);
  for (const auto& p : m.pairs) blocked[p.a] = blocked[p.b] = 1;
  return blocked;
}

std::vector<Colour> unused_colours(const Instance& instance, const RainbowMatching& m) {
  const ColourSet used = m.used_colours(instance.colour_count());
  std::vector<Colour> out;
  for (Colour c = 0; c < instance.colour_count(); ++c)
    if (!used.contains(c)) out.push_back(c);
  return out;
}

// Extends in place; caller guarantees `m` is rainbow.
void extend_greedily(const Instance& instance, RainbowMatching& m) {
  std::vector<char> blocked = blocked_vertices(instance, m);
  for (Colour c : unused_colours(instance, m)) {
    if (auto p = first_free_pair(instance, c, blocked)) {
      m.add(*p, c);
      blocked[p->a] = blocked[p->b] = 1;
    }
  }
}

}  // namespace

RainbowMatching greedy_extend(const Instance& instance, const RainbowMatching& start) {
  require_rainbow(instance, start, "greedy_extend");
  RainbowMatching out = start;
  extend_greedily(instance, out);
  return out;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, const SolverBudget& budget)
      : budget_(budget),
        deadline_(budget.time_limit),
        bound_(trivial_upper_bound(instance)),
        used_(instance.vertex_count(), 0) {
    edges_.reserve(instance.colour_count());
    for (Colour c = 0; c < instance.colour_count(); ++c) edges_.push_back(instance.colour_edges(c));
  }

  SolveResult run() {
    descend(0);
    SolveResult result;
    result.best = best_;
    result.nodes_explored = nodes_;
    const bool complete = !aborted_ || best_.size() == bound_;
    result.optimal = complete;
    if (budget_.target && best_.size() >= *budget_.target)
      result.reason = SolveReason::TargetReached;
    else if (complete)
      result.reason = SolveReason::ProvedOptimal;
    else
      result.reason = SolveReason::BudgetExhausted;
    return result;
  }

 private:
  // Returns false once the search must stop.
  bool descend(Colour level) {
    if (nodes_ >= budget_.node_limit || ((nodes_ & 1023) == 1023 && deadline_.passed())) {
      aborted_ = true;
      return false;
    }
    ++nodes_;
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (best_.size() == bound_ || (budget_.target && best_.size() >= *budget_.target)) {
        aborted_ = best_.size() != bound_;
        return false;
      }
    }
    if (level == edges_.size()) return true;
    if (current_.size() + (edges_.size() - level) <= best_.size()) return true;

    for (const EdgePair& p : edges_[level]) {
      if (used_[p.a] || used_[p.b]) continue;
      used_[p.a] = used_[p.b] = 1;
      current_.add(p, level);
      const bool go_on = descend(level + 1);
      current_.pairs.pop_back();
      current_.colours.pop_back();
      used_[p.a] = used_[p.b] = 0;
      if (!go_on) return false;
    }
    return descend(level + 1);
  }

  const SolverBudget& budget_;
  Deadline deadline_;
  std::size_t bound_;
  std::vector<std::vector<EdgePair>> edges_;
  std::vector<char> used_;
  RainbowMatching current_;
  RainbowMatching best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SolveResult exact_max(const Instance& instance, const SolverBudget& budget) {
  budget.check();
  if (!instance.valid())
    throw PreconditionError("exact_max requires a valid instance: " + instance.violations().front().message());
  return BranchAndBound(instance, budget).run();
}

namespace {

// c-coloured pairs touching m.pairs[i] and avoiding every other edge of m.
std::vector<EdgePair> switch_candidates(const Instance& instance, const RainbowMatching& m,
                                        std::span<const char> blocked, std::size_t i, Colour c) {
  const EdgePair e = m.pairs[i];
  std::vector<EdgePair> out;
  for (Vertex x : {e.a, e.b})
    for (Vertex z : instance.clique_containing(c, x)) {
      if (z == x) continue;
      if (blocked[z] && !e.touches(z)) continue;
      out.emplace_back(x, z);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<RainbowMatching> colour_switch(const Instance& instance, const RainbowMatching& m, Colour c) {
  require_rainbow(instance, m, "colour_switch");
  if (c >= instance.colour_count()) throw PreconditionError("colour_switch: colour " + std::to_string(c) + " out of range");
  if (m.used_colours(instance.colour_count()).contains(c))
    throw PreconditionError("colour_switch: colour " + std::to_string(c) + " is already used");
  require_maximal(instance, m, "colour_switch");

  const std::vector<char> blocked = blocked_vertices(instance, m);
  std::vector<RainbowMatching> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const EdgePair& f : switch_candidates(instance, m, blocked, i, c)) {
      RainbowMatching next = m;
      next.pairs[i] = f;
      next.colours[i] = c;
      out.push_back(std::move(next));
    }
  return out;
}

SteerResult steer_to_colour_set(const Instance& instance, const RainbowMatching& m, const ColourSet& good,
                                const SolverBudget& budget) {
  budget.check();
  require_maximal(instance, m, "steer_to_colour_set");
  const Deadline deadline(budget.time_limit);

  auto compliant = [&](const RainbowMatching& x) {
    for (Colour c : unused_colours(instance, x))
      if (!good.contains(c)) return false;
    return true;
  };

  SteerResult result;
  if (compliant(m)) {
    result.outcome = SteerOutcome::Reached;
    result.matching = m;
    return result;
  }

  std::set<std::vector<ColouredEdge>> seen{m.canonical()};
  std::deque<std::pair<RainbowMatching, std::size_t>> queue{{m, 0}};
  while (!queue.empty()) {
    if (result.states_explored >= budget.node_limit || deadline.passed()) {
      result.outcome = SteerOutcome::BudgetExhausted;
      return result;
    }
    auto [state, depth] = std::move(queue.front());
    queue.pop_front();
    ++result.states_explored;
    for (Colour c : unused_colours(instance, state))
      for (auto& next : colour_switch(instance, state, c)) {
        if (!seen.insert(next.canonical()).second) continue;
        if (!is_maximal(instance, next).maximal) continue;
        if (compliant(next)) {
          result.outcome = SteerOutcome::Reached;
          result.matching = std::move(next);
          result.moves = depth + 1;
          return result;
        }
        queue.emplace_back(std::move(next), depth + 1);
      }
  }
  result.outcome = SteerOutcome::Unreachable;
  return result;
}

std::optional<RainbowMatching> horn_augment(const Instance& instance, const RainbowMatching& m) {
  require_maximal(instance, m, "horn_augment");
  const std::vector<char> blocked = blocked_vertices(instance, m);
  const std::vector<Colour> unused = unused_colours(instance, m);

  // (colour, outside vertex) options hanging off one endpoint.
  auto options = [&](Vertex x) {
    std::vector<std::pair<Colour, Vertex>> out;
    for (Colour c : unused)
      for (Vertex z : instance.clique_containing(c, x))
        if (!blocked[z]) out.emplace_back(c, z);
    return out;
  };

  for (std::size_t i = 0; i < m.size(); ++i) {
    const EdgePair e = m.pairs[i];
    const auto at_a = options(e.a);
    if (at_a.empty()) continue;
    const auto at_b = options(e.b);
    for (const auto& [c1, z1] : at_a)
      for (const auto& [c2, z2] : at_b) {
        if (c1 == c2 || z1 == z2) continue;
        RainbowMatching out;
        for (std::size_t j = 0; j < m.size(); ++j) {
          if (j == i) {
            out.add(EdgePair(e.a, z1), c1);
            out.add(EdgePair(e.b, z2), c2);
          } else {
            out.add(m.pairs[j], m.colours[j]);
          }
        }
        return out;
      }
  }
  return std::nullopt;
}

namespace {

std::uint64_t state_hash(const RainbowMatching& m) {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (const auto& e : m.canonical()) {
    h = splitmix64(h ^ e.colour);
    h = splitmix64(h ^ ((static_cast<std::uint64_t>(e.pair.a) << 32) | e.pair.b));
  }
  return h;
}

// Breadth-first walk over the plateau of maximal matchings reachable from
// `start` by colour switches. Returns a strictly larger matching or nothing.
// States are deduplicated by a 64-bit hash of their canonical form.
class PlateauWalk {
 public:
  PlateauWalk(const Instance& instance, const SolverBudget& budget, const Deadline& deadline, std::uint64_t& nodes)
      : instance_(instance), budget_(budget), deadline_(deadline), nodes_(nodes) {}

  bool exhausted() const { return exhausted_; }

  std::optional<RainbowMatching> improve(const RainbowMatching& start) {
    const std::size_t frontier_cap = std::max<std::size_t>(64, (std::size_t{1} << 22) / (start.size() + 1));
    std::unordered_set<std::uint64_t> seen{state_hash(start)};
    std::deque<RainbowMatching> queue{start};
    while (!queue.empty()) {
      RainbowMatching state = std::move(queue.front());
      queue.pop_front();
      if (!spend()) return std::nullopt;
      if (auto bigger = horn_augment(instance_, state)) return greedy_extend(instance_, *bigger);

      std::vector<char> blocked = blocked_vertices(instance_, state);
      const std::vector<Colour> unused = unused_colours(instance_, state);
      for (Colour c : unused)
        for (std::size_t i = 0; i < state.size(); ++i)
          for (const EdgePair& f : switch_candidates(instance_, state, blocked, i, c)) {
            if (!spend()) return std::nullopt;
            const EdgePair e = state.pairs[i];
            const Colour freed = state.colours[i];
            state.pairs[i] = f;
            state.colours[i] = c;
            const bool stays_maximal = still_maximal(state, blocked, e, f, freed, c, unused);
            if (!stays_maximal) return greedy_extend(instance_, state);
            if (queue.size() < frontier_cap && seen.insert(state_hash(state)).second) queue.push_back(state);
            state.pairs[i] = e;
            state.colours[i] = freed;
          }
    }
    return std::nullopt;
  }

 private:
  bool spend() {
    if (nodes_ >= budget_.node_limit || ((nodes_ & 255) == 255 && deadline_.passed())) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  // The parent state was maximal, so after replacing e by f only the freed
  // colour, or an old unused colour through the vertex e gave up, can extend.
  bool still_maximal(const RainbowMatching& state, std::vector<char>& blocked, EdgePair e, EdgePair f, Colour freed,
                     Colour taken, const std::vector<Colour>& unused) const {
    for (Vertex v : {e.a, e.b}) blocked[v] = 0;
    blocked[f.a] = blocked[f.b] = 1;
    bool maximal = !first_free_pair(instance_, freed, blocked).has_value();
    if (maximal)
      for (Vertex w : {e.a, e.b}) {
        if (f.touches(w)) continue;
        for (Colour d : unused) {
          if (d == taken) continue;
          for (Vertex z : instance_.clique_containing(d, w))
            if (z != w && !blocked[z]) maximal = false;
        }
      }
    blocked[f.a] = blocked[f.b] = 0;
    for (Vertex v : {e.a, e.b}) blocked[v] = 1;
    (void)state;
    return maximal;
  }

  const Instance& instance_;
  const SolverBudget& budget_;
  const Deadline& deadline_;
  std::uint64_t& nodes_;
  bool exhausted_ = false;
};

}  // namespace

SolveResult local_search(const Instance& instance, const SolverBudget& budget) {
  budget.check();
  if (!instance.valid())
    throw PreconditionError("local_search requires a valid instance: " + instance.violations().front().message());
  const Deadline deadline(budget.time_limit);
  const std::size_t bound = trivial_upper_bound(instance);

  SolveResult result;
  result.best = greedy_extend(instance, RainbowMatching{});
  PlateauWalk walk(instance, budget, deadline, result.nodes_explored);
  for (;;) {
    if (budget.target && result.best.size() >= *budget.target) {
      result.reason = SolveReason::TargetReached;
      result.optimal = result.best.size() == bound;
      return result;
    }
    if (result.best.size() == bound) {
      result.reason = SolveReason::ProvedOptimal;
      result.optimal = true;
      return result;
    }
    auto bigger = walk.improve(result.best);
    if (!bigger) break;
    result.best = std::move(*bigger);
  }
  result.reason = SolveReason::BudgetExhausted;
  result.optimal = false;
  return result;
}

}  // namespace rainbow
