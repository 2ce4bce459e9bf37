#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "suo/graph.hpp"
#include "suo/mpp.hpp"
#include "suo/path.hpp"
#include "suo/rng.hpp"
#include "suo/search.hpp"
#include "suo/usage_table.hpp"

namespace suo {

// Per-robot goal queues. Replenishing streams never run dry.
class GoalStream {
 public:
  // Next goal for `robot` given the previously issued goal (invalid if none).
  using Generator = std::function<VertexId(std::size_t robot, VertexId previous, Rng& rng)>;

  // Uniform over unblocked vertices, never repeating the previous goal.
  static GoalStream random(const GridMap& map, std::size_t robots, std::uint64_t seed);
  // Each robot cycles through its pattern forever.
  static GoalStream cyclic(std::vector<std::vector<VertexId>> patterns);
  // Finite lists, no replenishment.
  static GoalStream fixed(std::vector<std::vector<VertexId>> lists);

  std::size_t robots() const { return queues_.size(); }
  const std::deque<VertexId>& goals(std::size_t robot) const { return queues_[robot]; }
  // Replenishes until `count` goals are queued; false if the stream is finite and short.
  bool ensure(std::size_t robot, std::size_t count);
  VertexId pop(std::size_t robot);
  std::int64_t issued() const { return issued_; }

 private:
  std::vector<std::deque<VertexId>> queues_;
  std::vector<VertexId> last_issued_;
  std::vector<Rng> rngs_;
  Generator generator_;
  std::int64_t issued_ = 0;
};

struct TruncatedGoals {
  std::vector<VertexId> chain;  // chain[0] is the robot's state
  std::int32_t distance = 0;    // accumulated shortest distance along the chain
};

// Appends goals, accumulating the distance from the previous chain element,
// until the distance reaches h. Throws InstanceError on an unreachable hop.
TruncatedGoals truncate_goal_list(VertexId state, std::span<const VertexId> goals, int h, DistanceOracle& distances);

struct CutTarget {
  VertexId target;
  Path leg;           // the shortest leg path the target was taken from
  int leg_index = 0;  // index of target on leg
};

// Replacement for the chain's last element: the vertex one step past the
// horizon along a shortest leg path, at leg index min(L, h - (d - L) + 1).
// With a table the leg is chosen by cost-to-go SU-I search against it (the leg
// starts at clock d - L for temporal tables); without one any shortest leg path.
CutTarget horizon_cut_target(const GridMap& map, VertexId leg_start, VertexId leg_end, int chain_distance, int h,
                             DistanceOracle& distances, const UsageTable* table, std::uint64_t seed);

struct WindowedSolverConfig {
  int max_retries = 10;
  // Search-node budget per attempt; 0 selects robots + 20.
  int max_nodes = 0;
  std::uint64_t seed = 0;
  // Fallback priorities, higher moves first (e.g. steps since the last goal).
  // Empty means all equal.
  std::vector<double> priorities;
};

struct WindowedSolution {
  std::vector<Path> paths;  // h + 1 positions each
  std::int64_t expanded = 0;
  int attempts = 0;
  bool fallback = false;  // produced by pibt_rollout
};

// Priority-based search with space-time A* over the chained targets: robots are
// planned against the robots that outrank them, and each conflict inside the
// first h steps branches on which robot of the pair goes first. Search beyond h
// is the unconstrained completion the baseline pays for. Each retry reseeds the
// tie-breaking; after max_retries failed attempts the h steps come from
// pibt_rollout instead.
WindowedSolution windowed_solver(const GridMap& map, DistanceOracle& distances, std::span<const VertexId> state,
                                 std::span<const std::vector<VertexId>> targets, int h,
                                 const WindowedSolverConfig& cfg = {});

// Priority inheritance with backtracking, one step at a time for h steps, each
// robot heading for its next target. Always collision-free. Priorities stay
// fixed over the rollout (plus a seeded fraction for ties); callers age them
// between cycles so that waiting robots eventually move first.
std::vector<Path> pibt_rollout(const GridMap& map, DistanceOracle& distances, std::span<const VertexId> state,
                               std::span<const std::vector<VertexId>> targets, int h,
                               std::span<const double> priorities, std::uint64_t seed);

struct HorizonConfig {
  int h = 5;
  bool use_horizon_cut = false;
  bool use_suo_targets = false;
  SuoParams suo;
  int commit_steps = 0;  // 0 commits all h steps
  std::uint64_t seed = 0;
  int max_retries = 10;
};

// Named variants: baseline, cut, cut+suo, cut+suo+temporal.
HorizonConfig lifelong_variant(const std::string& name, int h);

struct CycleRecord {
  int cycle = 0;
  std::int64_t goals_reached_cumulative = 0;
  double solver_ms = 0.0;
  std::int64_t expansions = 0;
  std::int64_t conflicts_in_initial_targets = 0;
  bool fallback = false;
};

struct LifelongStats {
  std::int64_t goals_reached = 0;
  std::int64_t elapsed_steps = 0;
  double throughput = 0.0;
  std::int64_t expansions = 0;
  double solver_ms = 0.0;
  std::int64_t fallback_cycles = 0;
  std::vector<CycleRecord> cycles;
};

// Truncate, cut, solve, execute; repeated until stop_goals are reached.
LifelongStats run_lifelong(const GridMap& map, std::span<const VertexId> starts, GoalStream& streams,
                           const HorizonConfig& cfg, std::int64_t stop_goals);

// Bounded-horizon search on a one-shot instance (goal lists of length 1).
// Throws SolverError when the summed distance to goal fails to improve for
// livelock_cycles consecutive cycles.
Solution solve_mpp_via_horizon(const MppInstance& instance, const HorizonConfig& cfg, int livelock_cycles = 20);

}  // namespace suo
