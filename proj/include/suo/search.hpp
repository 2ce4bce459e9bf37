#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "suo/graph.hpp"
#include "suo/path.hpp"
#include "suo/usage_table.hpp"

namespace suo {

enum class SearchMode { cost_to_go, cost_to_come };

struct SearchConfig {
  SearchMode mode = SearchMode::cost_to_go;
  SuoParams suo;
  std::uint64_t tie_break_seed = 0;
  // Bound on (t - start_time) for time-expanded search. 0 selects
  // H_short(start) + 2*(alpha_l + alpha_h) + 10.
  int max_time = 0;
  // Clock value of the start state; offsets every table lookup.
  int start_time = 0;
};

struct SearchStats {
  std::int64_t expanded = 0;
  std::int64_t generated = 0;
  std::int64_t h_evaluations = 0;
  // h_suo outside [0, 1) while beta_v + beta_e == 1.
  std::int64_t h_bound_violations = 0;
  // Cost-to-go states expanded with priority >= H_short + 1.
  std::int64_t priority_bound_violations = 0;

  SearchStats& operator+=(const SearchStats& o) {
    expanded += o.expanded;
    generated += o.generated;
    h_evaluations += o.h_evaluations;
    h_bound_violations += o.h_bound_violations;
    priority_bound_violations += o.priority_bound_violations;
    return *this;
  }
};

// A* with priority H_short(v) + h_suo(parent, v, t). Unit step costs, so the
// result is a shortest path; among shortest paths it minimises the largest
// interior vertex usage when beta_e == 0. The table's params decide the
// weights and whether the search runs over (vertex, time) states with waits.
// Throws NoPathError when the goal is unreachable.
Path find_path_cost_to_go(const GridMap& map, VertexId start, VertexId goal, const UsageTable& table,
                          const DistanceField& field, const SearchConfig& cfg, SearchStats* stats = nullptr);

// A* with step cost 1 + h_suo / (max_pair_dist + 1) and heuristic H_short.
// Priorities compare as (integer steps, surcharge) pairs: the total surcharge
// stays below 1, so this is exact and free of float drift in the step count.
Path find_path_cost_to_come(const GridMap& map, VertexId start, VertexId goal, const UsageTable& table,
                            const DistanceField& field, int max_pair_dist, const SearchConfig& cfg,
                            SearchStats* stats = nullptr);

struct StartGoal {
  VertexId start;
  VertexId goal;
};

enum class OrderPolicy { descending, ascending, random };

// Robots sorted by start-goal distance, descending; ties by index.
std::vector<std::size_t> order_robots(std::span<const std::int32_t> distances);
std::vector<std::size_t> order_robots(std::span<const std::int32_t> distances, OrderPolicy policy,
                                      std::uint64_t seed);

struct IndependentPlanOptions {
  int iterations = 1;  // r; 0 gives randomized plain A* paths
  OrderPolicy order = OrderPolicy::descending;
  std::uint64_t order_seed = 0;
  // Called after each iteration with paths in the original robot order.
  std::function<void(int iteration, std::span<const Path> paths)> on_iteration;
};

struct IndependentPlan {
  std::vector<Path> paths;  // original robot order
  std::vector<std::size_t> order;
  SearchStats stats;
};

// Independent paths with SU-I over r iterations. The usage table holds every
// robot's current path and is updated by remove/add deltas around each search.
// Throws InstanceError naming the first robot whose goal is unreachable.
IndependentPlan plan_independent_paths(const GridMap& map, std::span<const StartGoal> tasks,
                                       const SearchConfig& cfg, const IndependentPlanOptions& options);
IndependentPlan plan_independent_paths(const GridMap& map, std::span<const StartGoal> tasks,
                                       std::span<const DistanceField> fields, const SearchConfig& cfg,
                                       const IndependentPlanOptions& options);

}  // namespace suo
