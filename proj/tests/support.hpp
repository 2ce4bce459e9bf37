#pragma once

#include <initializer_list>
#include <vector>

#include "suo/graph.hpp"
#include "suo/path.hpp"
#include "suo/rng.hpp"
#include "suo/search.hpp"
#include "suo/usage_table.hpp"

namespace suo::test {

inline Path make_path(const GridMap& map, std::initializer_list<Cell> cells) {
  Path p;
  for (Cell c : cells) p.vertices.push_back(map.vertex(c));
  return p;
}

// Straight walks along a row or column, inclusive of both ends.
inline Path row_path(const GridMap& map, int y, int x0, int x1) {
  Path p;
  const int step = x1 >= x0 ? 1 : -1;
  for (int x = x0;; x += step) {
    p.vertices.push_back(map.vertex(x, y));
    if (x == x1) break;
  }
  return p;
}

inline Path col_path(const GridMap& map, int x, int y0, int y1) {
  Path p;
  const int step = y1 >= y0 ? 1 : -1;
  for (int y = y0;; y += step) {
    p.vertices.push_back(map.vertex(x, y));
    if (y == y1) break;
  }
  return p;
}

inline GridMap random_small_map(Rng& rng, int max_side, int max_obstacles) {
  for (;;) {
    const int w = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_side - 1)));
    const int h = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_side - 1)));
    std::vector<Cell> blocked;
    const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_obstacles + 1)));
    for (int i = 0; i < k; ++i) {
      blocked.push_back(Cell{static_cast<int>(rng.below(static_cast<std::uint64_t>(w))),
                             static_cast<int>(rng.below(static_cast<std::uint64_t>(h)))});
    }
    GridMap map(w, h, blocked);
    if (map.vertex_count() >= 2 && map.connected()) return map;
  }
}

// Random shortest path between two random vertices, drawn with a seeded plain A*.
inline Path random_shortest_path(const GridMap& map, Rng& rng) {
  const auto vs = map.vertices();
  const VertexId s = vs[rng.below(vs.size())];
  const VertexId g = vs[rng.below(vs.size())];
  SearchConfig cfg;
  cfg.tie_break_seed = rng.next();
  return find_path_cost_to_go(map, s, g, UsageTable{}, distance_field(map, g), cfg);
}

// A query on a small grid plus the paths of other robots.
struct SmallCase {
  GridMap map;
  std::vector<Path> others;
  VertexId start;
  VertexId goal;
};

inline SmallCase random_small_case(std::uint64_t seed, int max_side = 5, int max_obstacles = 3, int max_others = 6) {
  Rng rng(seed);
  GridMap map = random_small_map(rng, max_side, max_obstacles);
  const auto vs = map.vertices();
  const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_others + 1)));
  std::vector<Path> others;
  for (int i = 0; i < k; ++i) others.push_back(random_shortest_path(map, rng));
  const VertexId s = vs[rng.below(vs.size())];
  VertexId g = s;
  while (g == s) g = vs[rng.below(vs.size())];
  return SmallCase{std::move(map), std::move(others), s, g};
}

}  // namespace suo::test
