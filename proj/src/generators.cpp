#include "suo/generators.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "suo/errors.hpp"
#include "suo/rng.hpp"

namespace suo {

GridMap generate_random_grid(int width, int height, double obstacle_ratio, std::uint64_t seed, int retry_budget) {
  if (width <= 0 || height <= 0) throw GenerationError("grid dimensions must be positive");
  if (!(obstacle_ratio >= 0.0 && obstacle_ratio < 1.0)) {
    throw GenerationError("obstacle ratio must lie in [0, 1), got " + std::to_string(obstacle_ratio));
  }
  const int cells = width * height;
  // The epsilon keeps products like 600 * 0.1 from flooring to 59.
  const int blocked = static_cast<int>(std::floor(static_cast<double>(cells) * obstacle_ratio + 1e-9));
  if (blocked >= cells) throw GenerationError("obstacle ratio leaves no free cell");

  std::vector<std::int32_t> order(static_cast<std::size_t>(cells));
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    for (int i = 0; i < cells; ++i) order[i] = i;
    // Partial Fisher-Yates: the first `blocked` entries are the obstacles.
    for (int i = 0; i < blocked; ++i) {
      const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(cells - i)));
      std::swap(order[i], order[j]);
    }
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(cells), 0);
    for (int i = 0; i < blocked; ++i) mask[order[i]] = 1;
    GridMap map = GridMap::from_mask(width, height, std::move(mask));
    if (map.connected()) return map;
  }
  throw GenerationError("no connected random grid within " + std::to_string(retry_budget) + " attempts");
}

GridMap generate_warehouse(const WarehouseLayout& layout, std::uint64_t seed) {
  const int w = layout.shelf_width;
  const int h = layout.shelf_height;
  const int aisle = layout.aisle;
  if (aisle <= 0) throw GenerationError("warehouse aisle width must be positive");
  if (w <= 0 || h <= 0) throw GenerationError("shelf dimensions must be positive");
  if (layout.width <= 0 || layout.height <= 0) throw GenerationError("grid dimensions must be positive");

  const int avail_x = layout.width - 2 * aisle;
  const int avail_y = layout.height - 2 * aisle;
  const int nx = avail_x >= w ? (avail_x + aisle) / (w + aisle) : 0;
  const int ny = avail_y >= h ? (avail_y + aisle) / (h + aisle) : 0;
  if (nx < 1 || ny < 1) throw GenerationError("warehouse layout fits no shelf block");

  Rng rng(derive_seed(seed, 0x5eed));
  const int slack_x = avail_x - (nx * w + (nx - 1) * aisle);
  const int slack_y = avail_y - (ny * h + (ny - 1) * aisle);
  const int x0 = aisle + static_cast<int>(rng.below(static_cast<std::uint64_t>(slack_x) + 1));
  const int y0 = aisle + static_cast<int>(rng.below(static_cast<std::uint64_t>(slack_y) + 1));

  std::vector<std::uint8_t> mask(static_cast<std::size_t>(layout.width) * layout.height, 0);
  for (int by = 0; by < ny; ++by) {
    for (int bx = 0; bx < nx; ++bx) {
      const int sx = x0 + bx * (w + aisle);
      const int sy = y0 + by * (h + aisle);
      for (int y = sy; y < sy + h; ++y) {
        for (int x = sx; x < sx + w; ++x) mask[static_cast<std::size_t>(y) * layout.width + x] = 1;
      }
    }
  }
  GridMap map = GridMap::from_mask(layout.width, layout.height, std::move(mask));
  if (!map.connected()) throw GenerationError("warehouse layout is not connected");
  return map;
}

GridMap generate_cave(int width, int height, int free_cells, std::uint64_t seed) {
  if (width <= 0 || height <= 0) throw GenerationError("grid dimensions must be positive");
  const int cells = width * height;
  if (free_cells < 1 || free_cells > cells) throw GenerationError("free cell count out of range");

  Rng rng(derive_seed(seed, 0xca7e));
  std::vector<double> noise(static_cast<std::size_t>(cells));
  for (auto& n : noise) n = rng.uniform01();
  // Box blur passes turn white noise into smooth basins and ridges.
  std::vector<double> tmp(noise.size());
  constexpr int kRadius = 3;
  for (int pass = 0; pass < 3; ++pass) {
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        double sum = 0.0;
        int count = 0;
        for (int dy = -kRadius; dy <= kRadius; ++dy) {
          for (int dx = -kRadius; dx <= kRadius; ++dx) {
            const int xx = x + dx;
            const int yy = y + dy;
            if (xx < 0 || yy < 0 || xx >= width || yy >= height) continue;
            sum += noise[static_cast<std::size_t>(yy) * width + xx];
            ++count;
          }
        }
        tmp[static_cast<std::size_t>(y) * width + x] = sum / count;
      }
    }
    noise.swap(tmp);
  }

  // Flood from the centre, always taking the lowest frontier cell.
  using Entry = std::pair<double, std::int32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(cells), 1);
  std::vector<std::uint8_t> queued(static_cast<std::size_t>(cells), 0);
  const std::int32_t centre = (height / 2) * width + width / 2;
  frontier.emplace(noise[centre], centre);
  queued[centre] = 1;
  int grown = 0;
  while (grown < free_cells && !frontier.empty()) {
    const auto [value, idx] = frontier.top();
    frontier.pop();
    mask[idx] = 0;
    ++grown;
    const int x = idx % width;
    const int y = idx / width;
    const std::int32_t nbrs[4] = {y > 0 ? idx - width : -1, x + 1 < width ? idx + 1 : -1,
                                  y + 1 < height ? idx + width : -1, x > 0 ? idx - 1 : -1};
    for (std::int32_t n : nbrs) {
      if (n >= 0 && !queued[n]) {
        queued[n] = 1;
        frontier.emplace(noise[n], n);
      }
    }
  }
  return GridMap::from_mask(width, height, std::move(mask));
}

std::vector<Task> generate_instance(const GridMap& map, int n, std::uint64_t seed, int goals_per_robot,
                                    int retry_budget) {
  const auto vertices = map.vertices();
  if (n < 0) throw InstanceError("robot count must be non-negative");
  if (n > static_cast<int>(vertices.size())) {
    throw InstanceError("cannot place " + std::to_string(n) + " robots on " + std::to_string(vertices.size()) +
                        " vertices");
  }
  if (goals_per_robot < 1) throw InstanceError("goals per robot must be at least 1");
  const auto labels = map.component_labels();
  std::vector<std::vector<VertexId>> by_component;
  for (VertexId v : vertices) {
    const auto l = static_cast<std::size_t>(labels[v.index]);
    if (by_component.size() <= l) by_component.resize(l + 1);
    by_component[l].push_back(v);
  }

  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<VertexId> starts(vertices);
    rng.shuffle(std::span<VertexId>(starts));
    starts.resize(static_cast<std::size_t>(n));
    std::vector<Task> tasks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) tasks[i].start = starts[i];

    if (goals_per_robot == 1) {
      std::vector<VertexId> goals(vertices);
      rng.shuffle(std::span<VertexId>(goals));
      goals.resize(static_cast<std::size_t>(n));
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        if (labels[goals[i].index] != labels[starts[i].index]) ok = false;
        if (goals[i] == starts[i] && by_component[labels[starts[i].index]].size() > 1) ok = false;
        tasks[i].goals = {goals[i]};
      }
      if (ok) return tasks;
      continue;
    }

    for (auto& task : tasks) {
      const auto& pool = by_component[labels[task.start.index]];
      VertexId prev = task.start;
      for (int k = 0; k < goals_per_robot; ++k) {
        VertexId g = pool[rng.below(pool.size())];
        if (pool.size() > 1) {
          while (g == prev) g = pool[rng.below(pool.size())];
        }
        task.goals.push_back(g);
        prev = g;
      }
    }
    return tasks;
  }
  throw InstanceError("no valid instance within " + std::to_string(retry_budget) + " attempts");
}

}  // namespace suo
