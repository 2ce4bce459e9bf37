#pragma once

#include <algorithm>
#include <vector>

#include "suo/graph.hpp"
#include "suo/metrics.hpp"
#include "suo/path.hpp"
#include "suo/rng.hpp"

namespace suo::test {

// Robots pace back and forth inside their own row, so the base plan is
// conflict-free. The spare bottom row hosts the planted conflicts, each in its
// own column block so plants never interact.
struct Fuzz {
  GridMap map;
  std::vector<Path> paths;
  std::vector<Conflict> expected;
};

inline Fuzz make_fuzz_case(std::uint64_t seed) {
  Rng rng(seed);
  const int n = 2 + static_cast<int>(rng.below(8));
  const int plants = static_cast<int>(rng.below(6));
  const int width = 3 * (plants + 1) + 2;
  const int steps = 12 + static_cast<int>(rng.below(10));
  Fuzz f{GridMap(width, n + 1), {}, {}};
  for (int r = 0; r < n; ++r) {
    Path p;
    int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(width)));
    for (int t = 0; t <= steps; ++t) {
      p.vertices.push_back(f.map.vertex(x, r));
      const int dx = static_cast<int>(rng.below(3)) - 1;
      x = std::clamp(x + dx, 0, width - 1);
    }
    f.paths.push_back(std::move(p));
  }
  std::vector<int> used_times;
  for (int k = 0; k < plants; ++k) {
    int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    if (j >= i) ++j;
    if (i > j) std::swap(i, j);
    // Planted times stay inside the paths so the final vertices keep their rows.
    const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(steps - 2)));
    const int x = 3 * k;
    const VertexId a = f.map.vertex(x, n), b = f.map.vertex(x + 1, n);
    // A robot already planted at t or t - 1 would produce extra coincidences; skip those.
    auto busy = [&](int r) {
      for (int s : {t - 1, t}) {
        if (f.map.cell(f.paths[r].at(s)).y == n) return true;
      }
      return false;
    };
    if (busy(i) || busy(j)) continue;
    if (rng.below(2) == 0) {
      f.paths[i].vertices[t] = a;
      f.paths[j].vertices[t] = a;
      f.expected.push_back(Conflict{ConflictType::vertex, i, j, t, a, VertexId{}});
    } else {
      f.paths[i].vertices[t - 1] = a;
      f.paths[i].vertices[t] = b;
      f.paths[j].vertices[t - 1] = b;
      f.paths[j].vertices[t] = a;
      f.expected.push_back(Conflict{ConflictType::swap, i, j, t, a, b});
    }
  }
  std::sort(f.expected.begin(), f.expected.end());
  return f;
}

}  // namespace suo::test
