#pragma once

// Brute-force ground truth for small instances. Test support, but shipped with
// the library so results can be reproduced from the CLI build as well.

#include <cstdint>
#include <span>
#include <vector>

#include "suo/graph.hpp"
#include "suo/path.hpp"
#include "suo/usage_table.hpp"

namespace suo::oracle {

struct PathEnumeration {
  std::vector<Path> paths;  // every shortest start->goal path
  int length = 0;
};

// Depth-first walk of the BFS-distance DAG. Throws OracleTooLargeError when more
// than cap paths exist, NoPathError when the goal is unreachable.
PathEnumeration enumerate_shortest_paths(const GridMap& map, VertexId start, VertexId goal,
                                         std::size_t cap = 100000);

enum class Objective {
  max_single,  // max over interior vertices of the count
  sum_path,    // sum over the image of the count
};

struct ObjectiveMinimum {
  std::int64_t value = 0;
  Path witness;
};

// counts[cell index] = number of other paths whose image holds the vertex.
std::int64_t objective_value(const Path& path, std::span<const std::int32_t> counts, Objective objective);
ObjectiveMinimum brute_min_objective(const PathEnumeration& enumeration, std::span<const std::int32_t> counts,
                                     Objective objective);
// Reads aggregate vertex counts from the table.
ObjectiveMinimum brute_min_objective(const PathEnumeration& enumeration, const GridMap& map,
                                     const UsageTable& table, Objective objective);

// Image-membership counts of a path set, indexed by cell.
std::vector<std::int32_t> image_counts(const GridMap& map, std::span<const Path> paths);

}  // namespace suo::oracle
