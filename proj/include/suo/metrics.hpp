#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "suo/path.hpp"
#include "suo/usage_table.hpp"

namespace suo {

enum class ConflictType { vertex, swap };

// Robots i < j collide at time t. For a vertex conflict `a` is the shared vertex;
// for a swap, robot i moves a -> b while robot j moves b -> a.
struct Conflict {
  ConflictType type = ConflictType::vertex;
  int i = 0;
  int j = 0;
  int t = 0;
  VertexId a;
  VertexId b;
  friend auto operator<=>(const Conflict&, const Conflict&) = default;
};

struct TimedConflicts {
  std::int64_t vertex = 0;
  std::int64_t swap = 0;
  std::int64_t total() const { return vertex + swap; }
};

// max over 0 < t < T of the table count at P(t) (read at time_offset + t when temporal).
std::int32_t c_single(const Path& path, const UsageTable& table, int time_offset = 0);
// max over v of the number of paths whose image contains v.
std::int32_t c_single_global(std::span<const Path> paths);
// sum over j != i of |Im(P_i) ∩ Im(P_j)|.
std::int64_t c_path(std::size_t i, std::span<const Path> paths);
std::int64_t c_path_total(std::span<const Path> paths);
// Time-synchronised vertex co-occupancies (i, j, t) and swap events; robots rest at their last vertex.
TimedConflicts timed_conflicts(std::span<const Path> paths);

// Largest number of opposing-direction path pairs on one undirected edge.
std::int64_t max_edge_head_to_head(std::span<const Path> paths);
// Largest number of robots on one vertex at one time step.
std::int32_t max_vertex_time(std::span<const Path> paths);
// Largest number of swap pairs on one undirected edge at one time step.
std::int64_t max_edge_head_to_head_time(std::span<const Path> paths);

struct ConflictReport {
  std::int32_t c_single_global = 0;
  std::int64_t c_path_total = 0;
  std::int64_t vertex_conflicts_timed = 0;
  std::int64_t edge_conflicts_timed = 0;
  std::vector<std::int64_t> c_path_per_robot;
};
ConflictReport conflict_report(std::span<const Path> paths);

double throughput(std::int64_t goals_reached, std::int64_t elapsed_steps);
int makespan(std::span<const Path> paths);
std::int64_t sum_of_cost(std::span<const Path> paths);

// Divides every value by the first one; an all-zero series maps to zeros.
std::vector<double> normalize_by_first(std::span<const double> series);

}  // namespace suo
