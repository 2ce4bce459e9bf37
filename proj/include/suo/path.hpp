#pragma once

#include <algorithm>
#include <vector>

#include "suo/graph.hpp"

namespace suo {

// Time-indexed vertex sequence for one robot. After the last entry the robot
// rests at the final vertex forever. An empty path stands for "no path yet".
struct Path {
  std::vector<VertexId> vertices;

  bool empty() const { return vertices.empty(); }
  VertexId start() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }

  // Position at time t, holding the final vertex after the end.
  VertexId at(int t) const {
    if (t < 0) return vertices.front();
    const auto idx = std::min<std::size_t>(static_cast<std::size_t>(t), vertices.size() - 1);
    return vertices[idx];
  }

  // T: first time the final vertex is reached and held.
  int length() const {
    if (vertices.empty()) return 0;
    int t = static_cast<int>(vertices.size()) - 1;
    while (t > 0 && vertices[t - 1] == vertices[t]) --t;
    return t;
  }

  // Distinct vertices visited (Im(P)), sorted by index.
  std::vector<VertexId> image() const {
    std::vector<VertexId> out(vertices);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const Path&, const Path&) = default;
};

// Consecutive vertices identical or 4-adjacent, all passable.
bool is_feasible(const GridMap& map, const Path& path);

}  // namespace suo
