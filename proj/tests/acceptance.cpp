// One PASS/FAIL line per acceptance criterion, plus info lines with the
// measured numbers. Exits nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "fuzz_case.hpp"
#include "suo/generators.hpp"
#include "suo/lmpp.hpp"
#include "suo/metrics.hpp"
#include "suo/movingai.hpp"
#include "suo/mpp.hpp"
#include "suo/oracle.hpp"
#include "suo/search.hpp"
#include "support.hpp"

namespace {

using namespace suo;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void info(const std::string& s) { std::printf("  info: %s\n", s.c_str()); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const Outcome& o) {
  std::printf("criterion %d: %s - %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

SuoParams weights(double bv, double be, int n) {
  SuoParams p;
  p.beta_v = bv;
  p.beta_e = be;
  p.n_robots = n;
  return p;
}

std::vector<StartGoal> one_shot_tasks(const GridMap& map, int n, std::uint64_t seed) {
  std::vector<StartGoal> tasks;
  for (const auto& t : generate_instance(map, n, seed)) tasks.push_back({t.start, t.goals.front()});
  return tasks;
}

// h_suo bound counters, accumulated over every search of criteria 1-3.
SearchStats bound_stats;

Outcome shortest_paths() {
  const auto t0 = Clock::now();
  int cases = 0, shortest = 0;
  for (const auto mode : {SearchMode::cost_to_go, SearchMode::cost_to_come}) {
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
      const auto c = test::random_small_case(seed * 2 + (mode == SearchMode::cost_to_come ? 1 : 0), 9, 12, 8);
      Rng rng(seed);
      const double bv = rng.uniform01();
      auto params = weights(bv, 1.0 - bv, static_cast<int>(c.others.size()) + 1);
      params.temporal = seed % 2 == 0;
      if (params.temporal) {
        params.alpha_l = static_cast<int>(rng.below(3));
        params.alpha_h = static_cast<int>(rng.below(4));
      }
      const auto table = UsageTable::build(c.others, params);
      const auto field = distance_field(c.map, c.goal);
      SearchConfig cfg;
      cfg.mode = mode;
      cfg.tie_break_seed = seed;
      const auto p = mode == SearchMode::cost_to_go
                         ? find_path_cost_to_go(c.map, c.start, c.goal, table, field, cfg, &bound_stats)
                         : find_path_cost_to_come(c.map, c.start, c.goal, table, field, field.at(c.start), cfg, &bound_stats);
      ++cases;
      if (is_feasible(c.map, p) && p.start() == c.start && p.back() == c.goal && p.length() == field.at(c.start)) {
        ++shortest;
      }
    }
  }
  const double s = seconds_since(t0);
  return {shortest == cases && s < 30.0, fmt("%d/%d shortest, %.2f s (limit 30 s)", shortest, cases, s)};
}

Outcome oracle_match(SearchMode mode) {
  const auto objective = mode == SearchMode::cost_to_go ? oracle::Objective::max_single : oracle::Objective::sum_path;
  int cases = 0, equal = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const auto c = test::random_small_case(seed + (mode == SearchMode::cost_to_go ? 0 : 100000));
    const auto table = UsageTable::build(c.others, weights(1.0, 0.0, static_cast<int>(c.others.size()) + 1));
    const auto field = distance_field(c.map, c.goal);
    SearchConfig cfg;
    cfg.mode = mode;
    cfg.tie_break_seed = seed;
    const auto p = mode == SearchMode::cost_to_go
                       ? find_path_cost_to_go(c.map, c.start, c.goal, table, field, cfg, &bound_stats)
                       : find_path_cost_to_come(c.map, c.start, c.goal, table, field, field.at(c.start), cfg, &bound_stats);
    const auto counts = oracle::image_counts(c.map, c.others);
    const auto best = oracle::brute_min_objective(oracle::enumerate_shortest_paths(c.map, c.start, c.goal), counts,
                                                  objective);
    ++cases;
    if (p.length() == field.at(c.start) && oracle::objective_value(p, counts, objective) == best.value) ++equal;
  }
  return {equal == cases, fmt("%d/%d equal to the brute-force minimum", equal, cases)};
}

Outcome h_bound() {
  return {bound_stats.h_bound_violations == 0 && bound_stats.h_evaluations > 0,
          fmt("%lld h evaluations, %lld outside [0, 1), %lld priority-bound violations",
              static_cast<long long>(bound_stats.h_evaluations), static_cast<long long>(bound_stats.h_bound_violations),
              static_cast<long long>(bound_stats.priority_bound_violations))};
}

Outcome monotone() {
  int instances = 0, ok = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto map = generate_random_grid(20, 10, 0.05, seed);
    const auto tasks = one_shot_tasks(map, 100, seed);
    for (const auto mode : {SearchMode::cost_to_go, SearchMode::cost_to_come}) {
      SearchConfig cfg;
      cfg.mode = mode;
      cfg.suo = weights(1.0, 0.0, 1);
      cfg.tie_break_seed = seed;
      std::vector<std::int64_t> series;
      IndependentPlanOptions opt;
      opt.iterations = 8;
      opt.on_iteration = [&](int, std::span<const Path> paths) {
        series.push_back(mode == SearchMode::cost_to_go ? c_single_global(paths) : c_path_total(paths));
      };
      plan_independent_paths(map, tasks, cfg, opt);
      bool non_increasing = series.size() == 8;
      for (std::size_t k = 1; k < series.size(); ++k) non_increasing = non_increasing && series[k] <= series[k - 1];
      ++instances;
      if (non_increasing) ++ok;
    }
  }
  return {ok == instances, fmt("%d/%d series non-increasing over r = 1..8 (30 seeds x 2 modes)", ok, instances)};
}

double mean_timed_conflicts(const SearchConfig& base, int r) {
  double total = 0.0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto map = generate_random_grid(20, 10, 0.05, seed);
    const auto tasks = one_shot_tasks(map, 100, seed);
    auto cfg = base;
    cfg.tie_break_seed = seed;
    IndependentPlanOptions opt;
    opt.iterations = r;
    total += static_cast<double>(timed_conflicts(plan_independent_paths(map, tasks, cfg, opt).paths).total());
  }
  return total / 30.0;
}

Outcome conflict_reduction() {
  const auto t0 = Clock::now();
  SearchConfig aggregate;
  aggregate.suo = weights(0.5, 0.5, 1);
  SearchConfig temporal = aggregate;
  temporal.suo.temporal = true;
  temporal.suo.alpha_l = 0;
  temporal.suo.alpha_h = 0;
  const double base = mean_timed_conflicts(aggregate, 0);
  const double agg = mean_timed_conflicts(aggregate, 4);
  const double tmp = mean_timed_conflicts(temporal, 4);
  const double s = seconds_since(t0);
  info(fmt("timed conflicts r=0 %.2f, r=4 aggregate %.2f (%.1f%% lower), r=4 temporal alpha 0/0 %.2f", base, agg,
           100.0 * (1.0 - agg / base), tmp));
  const double drop = 1.0 - tmp / base;
  return {drop >= 0.30 && s < 120.0,
          fmt("temporal SU-I (beta 0.5/0.5, alpha 0/0) cuts timed conflicts by %.1f%% (need >= 30%%), %.1f s", 100.0 * drop,
              s)};
}

Outcome stabilization() {
  std::vector<double> mean(9, 0.0);
  double random_r1 = 0.0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto map = generate_random_grid(20, 10, 0.05, seed);
    const auto tasks = one_shot_tasks(map, 100, seed);
    SearchConfig cfg;
    cfg.suo = weights(1.0, 0.0, 1);
    cfg.tie_break_seed = seed;
    IndependentPlanOptions opt;
    opt.iterations = 0;
    mean[0] += c_single_global(plan_independent_paths(map, tasks, cfg, opt).paths) / 30.0;
    opt.iterations = 8;
    opt.on_iteration = [&](int r, std::span<const Path> paths) {
      mean[static_cast<std::size_t>(r)] += c_single_global(paths) / 30.0;
    };
    plan_independent_paths(map, tasks, cfg, opt);
    IndependentPlanOptions rnd;
    rnd.iterations = 1;
    rnd.order = OrderPolicy::random;
    rnd.order_seed = seed;
    random_r1 += c_single_global(plan_independent_paths(map, tasks, cfg, rnd).paths) / 30.0;
  }
  const auto norm = normalize_by_first(mean);
  std::string curve;
  bool non_increasing = true;
  for (std::size_t r = 0; r < norm.size(); ++r) {
    curve += fmt(r ? " %.3f" : "%.3f", norm[r]);
    if (r > 0 && norm[r] > norm[r - 1]) non_increasing = false;
  }
  const double delta = std::abs(norm[4] - norm[8]);
  const bool desc_wins = mean[1] < random_r1;
  info("normalized max vertex usage r=0..8: " + curve);
  info(fmt("r=1 batch mean: descending %.2f, random %.2f", mean[1], random_r1));
  return {non_increasing && delta <= 0.05 && desc_wins,
          fmt("curve %s, |r4 - r8| = %.3f (limit 0.05), descending %s random at r=1",
              non_increasing ? "non-increasing" : "not monotone", delta, desc_wins ? "beats" : "does not beat")};
}

struct Batch {
  double throughput = 0.0;
  double expansions = 0.0;
  double fallback_cycles = 0.0;
};

Batch lifelong_batch(const std::string& variant) {
  Batch b;
  const std::vector<std::uint64_t> seeds{1, 2, 3};
  for (std::uint64_t seed : seeds) {
    const auto map = generate_warehouse({}, seed);
    std::vector<VertexId> starts;
    for (const auto& t : generate_instance(map, 80, seed)) starts.push_back(t.start);
    auto streams = GoalStream::random(map, starts.size(), seed);
    auto cfg = lifelong_variant(variant, 5);
    cfg.seed = seed;
    const auto stats = run_lifelong(map, starts, streams, cfg, 500);
    b.throughput += stats.throughput / static_cast<double>(seeds.size());
    b.expansions += static_cast<double>(stats.expansions) / static_cast<double>(seeds.size());
    b.fallback_cycles += static_cast<double>(stats.fallback_cycles) / static_cast<double>(seeds.size());
  }
  info(fmt("%s: throughput %.3f, expansions %.0f, fallback cycles %.1f (37x20 warehouse, n=80, h=5, 500 goals, "
           "seeds 1-3)",
           variant.c_str(), b.throughput, b.expansions, b.fallback_cycles));
  return b;
}

Outcome horizon_cut(const Batch& base, const Batch& cut, double seconds) {
  const double exp_ratio = cut.expansions / base.expansions;
  const double tp_ratio = cut.throughput / base.throughput;
  return {exp_ratio <= 0.70 && tp_ratio >= 0.95 && seconds < 300.0,
          fmt("expansions %.1f%% of baseline (need <= 70%%), throughput %.1f%% of baseline (need >= 95%%), %.1f s",
              100.0 * exp_ratio, 100.0 * tp_ratio, seconds)};
}

Outcome throughput_order(const Batch& cut, const Batch& suo, const Batch& temporal) {
  return {temporal.throughput >= suo.throughput && suo.throughput >= cut.throughput,
          fmt("temporal %.3f >= suo %.3f >= cut %.3f", temporal.throughput, suo.throughput, cut.throughput)};
}

Outcome large_map() {
  const char* path = std::getenv("SUO_DEN520D_MAP");
  const std::string name = path ? path : "generated 257x256 cave, 28178 free cells";
  double mk = 0.0, soc = 0.0, worst = 0.0;
  const std::vector<std::uint64_t> seeds{1, 2, 3};
  for (std::uint64_t seed : seeds) {
    const auto map = path ? load_movingai_map(path) : generate_cave(257, 256, 28178, seed);
    const auto t0 = Clock::now();
    const auto tasks = one_shot_tasks(map, 50, seed);
    auto cfg = lifelong_variant("baseline", 50);
    cfg.seed = seed;
    const auto sol = solve_mpp_via_horizon(MppInstance{map, tasks}, cfg);
    worst = std::max(worst, seconds_since(t0));
    if (!validate_solution(sol.paths).empty()) return {false, fmt("seed %llu: solution has conflicts", seed)};
    mk += sol.stats.makespan_ratio / static_cast<double>(seeds.size());
    soc += sol.stats.sum_of_cost_ratio / static_cast<double>(seeds.size());
  }
  return {mk <= 1.05 && soc <= 1.05 && worst < 300.0,
          fmt("%s, n=50, h=50: makespan ratio %.4f, sum-of-cost ratio %.4f (limit 1.05), slowest run %.1f s",
              name.c_str(), mk, soc, worst)};
}

Outcome validator_fuzz() {
  int cases = 0, exact = 0, planted = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const auto f = test::make_fuzz_case(seed + 7919);
    planted += static_cast<int>(f.expected.size());
    ++cases;
    if (validate_solution(f.paths) == f.expected) ++exact;
  }
  return {exact == cases, fmt("%d/%d cases report exactly the planted set (%d planted conflicts)", exact, cases, planted)};
}

// Runs one criterion, turning an escaped exception into a failure line.
void run(int id, const std::function<Outcome()>& fn) {
  try {
    report(id, fn());
  } catch (const std::exception& e) {
    report(id, {false, std::string("exception: ") + e.what()});
  }
}

}  // namespace

int main() {
  run(1, shortest_paths);
  run(2, [] { return oracle_match(SearchMode::cost_to_go); });
  run(3, [] { return oracle_match(SearchMode::cost_to_come); });
  run(4, h_bound);
  run(5, monotone);
  run(6, conflict_reduction);
  run(7, stabilization);

  Batch base, cut, suo_b, temporal;
  double cut_seconds = 0.0;
  bool lifelong_ok = true;
  try {
    const auto t0 = Clock::now();
    base = lifelong_batch("baseline");
    cut = lifelong_batch("cut");
    cut_seconds = seconds_since(t0);
    suo_b = lifelong_batch("cut+suo");
    temporal = lifelong_batch("cut+suo+temporal");
  } catch (const std::exception& e) {
    lifelong_ok = false;
    report(8, {false, std::string("exception: ") + e.what()});
    report(9, {false, std::string("exception: ") + e.what()});
  }
  if (lifelong_ok) {
    run(8, [&] { return horizon_cut(base, cut, cut_seconds); });
    run(9, [&] { return throughput_order(cut, suo_b, temporal); });
  }
  run(10, large_map);
  run(11, validator_fuzz);

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
