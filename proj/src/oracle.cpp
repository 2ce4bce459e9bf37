#include "suo/oracle.hpp"

#include <algorithm>
#include <limits>

#include "suo/errors.hpp"

namespace suo::oracle {

PathEnumeration enumerate_shortest_paths(const GridMap& map, VertexId start, VertexId goal, std::size_t cap) {
  if (!map.passable(start) || !map.passable(goal)) throw ArgumentError("endpoints must be free vertices");
  const auto field = distance_field(map, goal);
  if (!field.reachable(start)) throw NoPathError("goal unreachable from start");

  PathEnumeration out;
  out.length = field.at(start);
  std::vector<VertexId> stack{start};
  // Explicit DFS over the DAG of distance-decreasing moves.
  std::vector<std::pair<Neighbors, int>> frames;
  frames.emplace_back(map.neighbors(start), 0);
  if (start == goal) {
    out.paths.push_back(Path{stack});
    return out;
  }
  while (!frames.empty()) {
    auto& [nbrs, next] = frames.back();
    if (next >= nbrs.size()) {
      frames.pop_back();
      stack.pop_back();
      continue;
    }
    const VertexId u = *(nbrs.begin() + next);
    ++next;
    if (field.at(u) != field.at(stack.back()) - 1) continue;
    stack.push_back(u);
    if (u == goal) {
      if (out.paths.size() >= cap) throw OracleTooLargeError("more shortest paths than the enumeration cap");
      out.paths.push_back(Path{stack});
      stack.pop_back();
      continue;
    }
    frames.emplace_back(map.neighbors(u), 0);
  }
  return out;
}

std::int64_t objective_value(const Path& path, std::span<const std::int32_t> counts, Objective objective) {
  std::int64_t value = 0;
  if (objective == Objective::max_single) {
    const int T = path.length();
    for (int t = 1; t < T; ++t) {
      value = std::max<std::int64_t>(value, counts[static_cast<std::size_t>(path.at(t).index)]);
    }
  } else {
    for (VertexId v : path.image()) value += counts[static_cast<std::size_t>(v.index)];
  }
  return value;
}

ObjectiveMinimum brute_min_objective(const PathEnumeration& enumeration, std::span<const std::int32_t> counts,
                                     Objective objective) {
  if (enumeration.paths.empty()) throw ArgumentError("empty path enumeration");
  ObjectiveMinimum best{std::numeric_limits<std::int64_t>::max(), {}};
  for (const auto& p : enumeration.paths) {
    const auto v = objective_value(p, counts, objective);
    if (v < best.value) best = ObjectiveMinimum{v, p};
  }
  return best;
}

ObjectiveMinimum brute_min_objective(const PathEnumeration& enumeration, const GridMap& map,
                                     const UsageTable& table, Objective objective) {
  std::vector<std::int32_t> counts(static_cast<std::size_t>(map.cell_count()), 0);
  for (VertexId v : map.vertices()) counts[static_cast<std::size_t>(v.index)] = table.vertex_use(v, 0);
  return brute_min_objective(enumeration, counts, objective);
}

std::vector<std::int32_t> image_counts(const GridMap& map, std::span<const Path> paths) {
  std::vector<std::int32_t> counts(static_cast<std::size_t>(map.cell_count()), 0);
  for (const auto& p : paths) {
    for (VertexId v : p.image()) ++counts[static_cast<std::size_t>(v.index)];
  }
  return counts;
}

}  // namespace suo::oracle
