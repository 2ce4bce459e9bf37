#pragma once

#include <cstdint>
#include <vector>

#include "suo/graph.hpp"

namespace suo {

// ⌊width*height*ratio⌋ blocked cells drawn from the seeded stream; redrawn until
// the free region is connected, up to retry_budget attempts.
GridMap generate_random_grid(int width, int height, double obstacle_ratio, std::uint64_t seed,
                             int retry_budget = 100);

struct WarehouseLayout {
  int width = 37;
  int height = 20;
  int shelf_width = 5;
  int shelf_height = 2;
  int aisle = 1;  // corridor width between shelves and around the border
};

// Rectangular shelf blocks on a regular lattice. Leftover rows/columns are
// split between the two borders with the seed choosing the split.
GridMap generate_warehouse(const WarehouseLayout& layout, std::uint64_t seed);

// Organic connected free region with exactly free_cells cells, grown from the
// centre in order of a smoothed noise field. Stand-in for DAO game maps.
GridMap generate_cave(int width, int height, int free_cells, std::uint64_t seed);

struct Task {
  VertexId start;
  std::vector<VertexId> goals;
};

// Starts are pairwise distinct. With goals_per_robot == 1 goals are pairwise
// distinct too; longer goal lists only avoid consecutive repeats. Each goal is
// reachable from its predecessor.
std::vector<Task> generate_instance(const GridMap& map, int n, std::uint64_t seed, int goals_per_robot = 1,
                                    int retry_budget = 100);

}  // namespace suo
