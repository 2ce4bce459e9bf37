#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

namespace suo {

struct Cell {
  int x = 0;  // column
  int y = 0;  // row, 0 at the top
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// Dense row-major cell index (y * width + x) of an unblocked cell.
struct VertexId {
  std::int32_t index = -1;

  constexpr bool valid() const { return index >= 0; }
  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct DirectedEdge {
  VertexId from;
  VertexId to;
  friend constexpr auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// Up to four grid neighbours, in the fixed order up, right, down, left.
class Neighbors {
 public:
  void push(VertexId v) { items_[count_++] = v; }
  const VertexId* begin() const { return items_.data(); }
  const VertexId* end() const { return items_.data() + count_; }
  int size() const { return count_; }

 private:
  std::array<VertexId, 4> items_{};
  int count_ = 0;
};

// 4-connected grid with blocked cells.
class GridMap {
 public:
  GridMap(int width, int height, const std::vector<Cell>& blocked = {});
  // mask[y * width + x] != 0 marks a blocked cell.
  static GridMap from_mask(int width, int height, std::vector<std::uint8_t> mask);

  int width() const { return width_; }
  int height() const { return height_; }
  int cell_count() const { return width_ * height_; }
  int vertex_count() const { return vertex_count_; }

  bool in_bounds(Cell c) const { return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_; }
  bool passable(Cell c) const { return in_bounds(c) && !blocked_[index_of(c)]; }
  bool passable(VertexId v) const {
    return v.index >= 0 && v.index < cell_count() && !blocked_[static_cast<std::size_t>(v.index)];
  }

  // Throws ArgumentError when the cell is out of bounds or blocked.
  VertexId vertex(Cell c) const;
  VertexId vertex(int x, int y) const { return vertex(Cell{x, y}); }
  Cell cell(VertexId v) const { return Cell{v.index % width_, v.index / width_}; }

  Neighbors neighbors(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;

  std::vector<VertexId> vertices() const;
  std::vector<Cell> blocked_cells() const;
  const std::vector<std::uint8_t>& mask() const { return blocked_; }

  // True when all unblocked cells form one 4-connected component.
  bool connected() const;
  // Component label per cell (-1 for blocked cells).
  std::vector<std::int32_t> component_labels() const;

  friend bool operator==(const GridMap& a, const GridMap& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.blocked_ == b.blocked_;
  }

 private:
  GridMap() = default;
  std::size_t index_of(Cell c) const { return static_cast<std::size_t>(c.y) * width_ + c.x; }
  void init_counts();

  int width_ = 0;
  int height_ = 0;
  int vertex_count_ = 0;
  std::vector<std::uint8_t> blocked_;
};

// Exact BFS distances to a goal vertex.
class DistanceField {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  DistanceField() = default;
  DistanceField(VertexId goal, std::vector<std::int32_t> dist) : goal_(goal), dist_(std::move(dist)) {}

  VertexId goal() const { return goal_; }
  std::int32_t at(VertexId v) const { return dist_[static_cast<std::size_t>(v.index)]; }
  std::int32_t operator()(VertexId v) const { return at(v); }
  bool reachable(VertexId v) const { return at(v) != kUnreachable; }
  const std::vector<std::int32_t>& raw() const { return dist_; }

 private:
  VertexId goal_;
  std::vector<std::int32_t> dist_;
};

// Throws ArgumentError for a blocked goal.
DistanceField distance_field(const GridMap& map, VertexId goal);

// Lazily computed, cached distance fields keyed by goal. Not thread-safe; one per worker.
class DistanceOracle {
 public:
  explicit DistanceOracle(const GridMap& map, std::size_t byte_budget = std::size_t{256} << 20);

  std::shared_ptr<const DistanceField> field(VertexId goal);
  std::int32_t distance(VertexId from, VertexId to) { return field(to)->at(from); }
  const GridMap& map() const { return *map_; }
  std::size_t computed() const { return computed_; }

 private:
  const GridMap* map_;
  std::size_t max_fields_;
  std::size_t computed_ = 0;
  std::unordered_map<std::int32_t, std::shared_ptr<const DistanceField>> cache_;
};

}  // namespace suo

template <>
struct std::hash<suo::VertexId> {
  std::size_t operator()(suo::VertexId v) const noexcept { return std::hash<std::int32_t>{}(v.index); }
};
