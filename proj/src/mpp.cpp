#include "suo/mpp.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <unordered_set>

#include "suo/kernels.hpp"
#include "suo/spacetime.hpp"

namespace suo {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

bool compatible(const Path& path, const ReservationTable& res) {
  if (path.empty()) return false;
  const int last = static_cast<int>(path.vertices.size()) - 1;
  if (!res.vertex_free(path.at(0), 0)) return false;
  for (int t = 1; t <= last; ++t) {
    if (!res.move_free(path.at(t - 1), path.at(t), t)) return false;
  }
  return res.can_hold(path.back(), last);
}

}  // namespace

void MppInstance::validate() const {
  std::unordered_set<std::int32_t> starts;
  std::unordered_set<std::int32_t> goals;
  const auto labels = map.component_labels();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    const std::string who = "robot " + std::to_string(i);
    if (!map.passable(t.start)) throw InstanceError(who + ": start is not a free vertex");
    if (!map.passable(t.goal)) throw InstanceError(who + ": goal is not a free vertex");
    if (!starts.insert(t.start.index).second) throw InstanceError(who + ": repeated start");
    if (!goals.insert(t.goal.index).second) throw InstanceError(who + ": repeated goal");
    if (labels[static_cast<std::size_t>(t.start.index)] != labels[static_cast<std::size_t>(t.goal.index)]) {
      throw InstanceError(who + ": goal unreachable from start");
    }
  }
}

std::vector<std::size_t> longest_first_order(std::span<const Path> initial) {
  std::vector<std::size_t> order(initial.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return initial[a].length() > initial[b].length(); });
  return order;
}

std::vector<Path> default_resolver_prioritized(const GridMap& map, std::span<const Path> initial,
                                               std::span<const std::size_t> order, ResolverStats& stats) {
  DistanceOracle distances(map);
  ReservationTable res;
  std::vector<Path> out(initial.size());
  for (std::size_t i : order) {
    const Path& p = initial[i];
    if (p.empty()) throw SolverError("robot " + std::to_string(i) + ": missing initial path", static_cast<int>(i));
    if (compatible(p, res)) {
      out[i] = p;
    } else {
      SpaceTimeQuery q;
      q.start = p.start();
      q.targets = {p.back()};
      q.time_limit = 2 * (map.width() + map.height()) + res.max_time();
      q.seed = i;
      auto r = plan_space_time(map, distances, res, q);
      stats.expanded += r.expanded;
      if (!r.found) {
        throw SolverError("robot " + std::to_string(i) + ": no collision-free path within the time bound",
                          static_cast<int>(i));
      }
      out[i] = std::move(r.path);
      ++stats.replanned;
    }
    res.reserve(out[i], static_cast<int>(out[i].vertices.size()) - 1, true);
  }
  return out;
}

std::vector<Conflict> validate_solution(std::span<const Path> paths) { return kernels::parallel::find_conflicts(paths); }

void finalize_solution(const MppInstance& instance, Solution& solution) {
  std::vector<VertexId> goals;
  for (const auto& t : instance.tasks) goals.push_back(t.goal);
  const auto fields = kernels::parallel::distance_fields(instance.map, goals);
  int mk_lb = 0;
  std::int64_t soc_lb = 0;
  for (std::size_t i = 0; i < instance.tasks.size(); ++i) {
    const int d = fields[i].at(instance.tasks[i].start);
    mk_lb = std::max(mk_lb, d);
    soc_lb += d;
  }
  solution.makespan = makespan(solution.paths);
  solution.sum_of_cost = sum_of_cost(solution.paths);
  auto& s = solution.stats;
  s.makespan_lower_bound = mk_lb;
  s.sum_of_cost_lower_bound = soc_lb;
  s.makespan_ratio = mk_lb > 0 ? static_cast<double>(solution.makespan) / mk_lb : 1.0;
  s.sum_of_cost_ratio = soc_lb > 0 ? static_cast<double>(solution.sum_of_cost) / static_cast<double>(soc_lb) : 1.0;
}

Solution solve_mpp(const MppInstance& instance, const MppConfig& cfg, const Resolver& resolver) {
  instance.validate();
  Solution solution;
  auto& stats = solution.stats;

  const auto t1 = std::chrono::steady_clock::now();
  IndependentPlanOptions opts;
  opts.iterations = cfg.iterations;
  opts.order = cfg.order;
  opts.order_seed = cfg.search.tie_break_seed;
  auto plan = plan_independent_paths(instance.map, instance.tasks, cfg.search, opts);
  stats.phase1_ms = ms_since(t1);
  stats.phase1_search = plan.stats;
  stats.initial_conflicts = conflict_report(plan.paths);

  const auto t2 = std::chrono::steady_clock::now();
  const auto order = longest_first_order(plan.paths);
  try {
    solution.paths = resolver ? resolver(instance.map, plan.paths, order, stats.resolver)
                              : default_resolver_prioritized(instance.map, plan.paths, order, stats.resolver);
  } catch (const SolverError& e) {
    stats.phase2_ms = ms_since(t2);
    throw SolverError(e.what(), e.robot(), stats);
  }
  stats.phase2_ms = ms_since(t2);

  if (solution.paths.size() != instance.tasks.size()) throw SolverError("resolver returned a wrong path count", -1, stats);
  for (std::size_t i = 0; i < solution.paths.size(); ++i) {
    const auto& p = solution.paths[i];
    if (p.empty() || p.start() != instance.tasks[i].start || p.back() != instance.tasks[i].goal ||
        !is_feasible(instance.map, p)) {
      throw SolverError("resolver returned an invalid path", static_cast<int>(i), stats);
    }
  }
  if (!validate_solution(solution.paths).empty()) throw SolverError("resolver output has conflicts", -1, stats);
  finalize_solution(instance, solution);
  return solution;
}

}  // namespace suo
