#include "suo/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>

#include "suo/errors.hpp"
#include "suo/path.hpp"

namespace suo {

GridMap::GridMap(int width, int height, const std::vector<Cell>& blocked) {
  if (width <= 0 || height <= 0) {
    throw ArgumentError("grid dimensions must be positive, got " + std::to_string(width) + "x" +
                        std::to_string(height));
  }
  width_ = width;
  height_ = height;
  blocked_.assign(static_cast<std::size_t>(width) * height, 0);
  for (const Cell c : blocked) {
    if (!in_bounds(c)) {
      throw ArgumentError("blocked cell (" + std::to_string(c.x) + "," + std::to_string(c.y) + ") out of bounds");
    }
    blocked_[index_of(c)] = 1;
  }
  init_counts();
}

GridMap GridMap::from_mask(int width, int height, std::vector<std::uint8_t> mask) {
  if (width <= 0 || height <= 0) throw ArgumentError("grid dimensions must be positive");
  if (mask.size() != static_cast<std::size_t>(width) * height) throw ArgumentError("mask size mismatch");
  GridMap map;
  map.width_ = width;
  map.height_ = height;
  for (auto& m : mask) m = m ? 1 : 0;
  map.blocked_ = std::move(mask);
  map.init_counts();
  return map;
}

void GridMap::init_counts() {
  vertex_count_ = 0;
  for (auto b : blocked_) vertex_count_ += b ? 0 : 1;
}

VertexId GridMap::vertex(Cell c) const {
  if (!passable(c)) {
    throw ArgumentError("cell (" + std::to_string(c.x) + "," + std::to_string(c.y) + ") is not a free vertex");
  }
  return VertexId{static_cast<std::int32_t>(index_of(c))};
}

Neighbors GridMap::neighbors(VertexId v) const {
  Neighbors out;
  const int x = v.index % width_;
  const int y = v.index / width_;
  if (y > 0 && !blocked_[v.index - width_]) out.push(VertexId{v.index - width_});
  if (x + 1 < width_ && !blocked_[v.index + 1]) out.push(VertexId{v.index + 1});
  if (y + 1 < height_ && !blocked_[v.index + width_]) out.push(VertexId{v.index + width_});
  if (x > 0 && !blocked_[v.index - 1]) out.push(VertexId{v.index - 1});
  return out;
}

bool GridMap::adjacent(VertexId a, VertexId b) const {
  if (!passable(a) || !passable(b)) return false;
  const Cell ca = cell(a);
  const Cell cb = cell(b);
  return std::abs(ca.x - cb.x) + std::abs(ca.y - cb.y) == 1;
}

std::vector<VertexId> GridMap::vertices() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(vertex_count_));
  for (std::int32_t i = 0; i < cell_count(); ++i) {
    if (!blocked_[i]) out.push_back(VertexId{i});
  }
  return out;
}

std::vector<Cell> GridMap::blocked_cells() const {
  std::vector<Cell> out;
  for (std::int32_t i = 0; i < cell_count(); ++i) {
    if (blocked_[i]) out.push_back(Cell{i % width_, i / width_});
  }
  return out;
}

std::vector<std::int32_t> GridMap::component_labels() const {
  std::vector<std::int32_t> label(blocked_.size(), -1);
  std::int32_t next = 0;
  std::vector<VertexId> stack;
  for (std::int32_t i = 0; i < cell_count(); ++i) {
    if (blocked_[i] || label[i] >= 0) continue;
    label[i] = next;
    stack.push_back(VertexId{i});
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : neighbors(v)) {
        if (label[u.index] < 0) {
          label[u.index] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return label;
}

bool GridMap::connected() const {
  const auto labels = component_labels();
  for (auto l : labels) {
    if (l > 0) return false;
  }
  return true;
}

DistanceField distance_field(const GridMap& map, VertexId goal) {
  if (!map.passable(goal)) throw ArgumentError("distance field goal is blocked or out of bounds");
  std::vector<std::int32_t> dist(static_cast<std::size_t>(map.cell_count()), DistanceField::kUnreachable);
  std::vector<VertexId> frontier{goal};
  std::vector<VertexId> next;
  dist[goal.index] = 0;
  std::int32_t d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (VertexId v : frontier) {
      for (VertexId u : map.neighbors(v)) {
        if (dist[u.index] == DistanceField::kUnreachable) {
          dist[u.index] = d;
          next.push_back(u);
        }
      }
    }
    frontier.swap(next);
  }
  return DistanceField(goal, std::move(dist));
}

DistanceOracle::DistanceOracle(const GridMap& map, std::size_t byte_budget) : map_(&map) {
  const std::size_t per_field = static_cast<std::size_t>(map.cell_count()) * sizeof(std::int32_t);
  max_fields_ = std::max<std::size_t>(16, byte_budget / std::max<std::size_t>(per_field, 1));
}

std::shared_ptr<const DistanceField> DistanceOracle::field(VertexId goal) {
  if (auto it = cache_.find(goal.index); it != cache_.end()) return it->second;
  if (cache_.size() >= max_fields_) cache_.clear();
  auto f = std::make_shared<const DistanceField>(distance_field(*map_, goal));
  ++computed_;
  cache_.emplace(goal.index, f);
  return f;
}

bool is_feasible(const GridMap& map, const Path& path) {
  for (std::size_t t = 0; t < path.vertices.size(); ++t) {
    if (!map.passable(path.vertices[t])) return false;
    if (t > 0 && path.vertices[t] != path.vertices[t - 1] && !map.adjacent(path.vertices[t - 1], path.vertices[t])) {
      return false;
    }
  }
  return true;
}

}  // namespace suo
