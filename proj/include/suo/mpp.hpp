#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "suo/errors.hpp"
#include "suo/graph.hpp"
#include "suo/metrics.hpp"
#include "suo/path.hpp"
#include "suo/search.hpp"

namespace suo {

struct MppInstance {
  GridMap map;
  std::vector<StartGoal> tasks;

  // Throws InstanceError: repeated starts or goals, unreachable goal.
  void validate() const;
};

struct ResolverStats {
  std::int64_t expanded = 0;
  int replanned = 0;  // robots whose initial path had to change
};

struct MppStats {
  double phase1_ms = 0.0;
  double phase2_ms = 0.0;
  SearchStats phase1_search;
  ConflictReport initial_conflicts;
  ResolverStats resolver;
  int makespan_lower_bound = 0;
  std::int64_t sum_of_cost_lower_bound = 0;
  double makespan_ratio = 1.0;
  double sum_of_cost_ratio = 1.0;
  int cycles = 0;  // horizon-based solving only
};

struct Solution {
  std::vector<Path> paths;
  int makespan = 0;
  std::int64_t sum_of_cost = 0;
  MppStats stats;
};

class SolverError : public Error {
 public:
  SolverError(const std::string& what, int robot, MppStats partial = {})
      : Error(what), robot_(robot), stats_(std::move(partial)) {}
  int robot() const { return robot_; }
  const MppStats& stats() const { return stats_; }

 private:
  int robot_;
  MppStats stats_;
};

// Initial paths in, collision-free paths out (same robot order). Robots are
// planned in `order`. Throws SolverError on failure.
using Resolver = std::function<std::vector<Path>(const GridMap& map, std::span<const Path> initial,
                                                 std::span<const std::size_t> order, ResolverStats& stats)>;

// Indices sorted by initial path length, longest first; ties by index.
std::vector<std::size_t> longest_first_order(std::span<const Path> initial);

// Prioritized space-time A*. Initial paths compatible with the reservations of
// higher-priority robots are kept; the rest are replanned with waits allowed.
// Every robot's final rest is reserved for all later times. The per-robot time
// bound is 2*(width + height) + the latest reserved time step.
std::vector<Path> default_resolver_prioritized(const GridMap& map, std::span<const Path> initial,
                                               std::span<const std::size_t> order, ResolverStats& stats);

struct MppConfig {
  SearchConfig search;
  int iterations = 1;  // r
  OrderPolicy order = OrderPolicy::descending;
};

// Phase 1: SU-I independent paths; phase 2: the resolver.
Solution solve_mpp(const MppInstance& instance, const MppConfig& cfg, const Resolver& resolver = {});

// Complete conflict list; empty means collision-free.
std::vector<Conflict> validate_solution(std::span<const Path> paths);

// Fills makespan, sum-of-cost and the ratios against the shortest-distance lower bounds.
void finalize_solution(const MppInstance& instance, Solution& solution);

}  // namespace suo
