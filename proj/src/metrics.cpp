#include "suo/metrics.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "suo/errors.hpp"
#include "suo/kernels.hpp"

namespace suo {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a.index)) << 32) |
         static_cast<std::uint32_t>(b.index);
}

std::unordered_map<std::int32_t, std::int64_t> image_membership(std::span<const Path> paths) {
  std::unordered_map<std::int32_t, std::int64_t> m;
  for (const auto& p : paths) {
    for (VertexId v : p.image()) ++m[v.index];
  }
  return m;
}

}  // namespace

std::int32_t c_single(const Path& path, const UsageTable& table, int time_offset) {
  std::int32_t best = 0;
  const int T = path.length();
  for (int t = 1; t < T; ++t) best = std::max(best, table.vertex_use(path.at(t), time_offset + t));
  return best;
}

std::int32_t c_single_global(std::span<const Path> paths) {
  std::int64_t best = 0;
  for (const auto& [v, m] : image_membership(paths)) best = std::max(best, m);
  return static_cast<std::int32_t>(best);
}

std::int64_t c_path(std::size_t i, std::span<const Path> paths) {
  if (i >= paths.size()) throw ArgumentError("robot index out of range");
  const auto mine = paths[i].image();
  std::int64_t total = 0;
  for (std::size_t j = 0; j < paths.size(); ++j) {
    if (j == i) continue;
    const auto other = paths[j].image();
    std::vector<VertexId> both;
    std::set_intersection(mine.begin(), mine.end(), other.begin(), other.end(), std::back_inserter(both));
    total += static_cast<std::int64_t>(both.size());
  }
  return total;
}

std::int64_t c_path_total(std::span<const Path> paths) { return kernels::parallel::path_overlap_total(paths); }

TimedConflicts timed_conflicts(std::span<const Path> paths) {
  TimedConflicts out;
  for (const auto& c : kernels::parallel::find_conflicts(paths)) {
    if (c.type == ConflictType::vertex) {
      ++out.vertex;
    } else {
      ++out.swap;
    }
  }
  return out;
}

std::int64_t max_edge_head_to_head(std::span<const Path> paths) {
  std::unordered_map<std::uint64_t, std::int64_t> directed;
  for (const auto& p : paths) {
    std::vector<std::uint64_t> edges;
    for (std::size_t t = 1; t < p.vertices.size(); ++t) {
      if (p.vertices[t - 1] != p.vertices[t]) edges.push_back(pair_key(p.vertices[t - 1], p.vertices[t]));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto e : edges) ++directed[e];
  }
  std::int64_t best = 0;
  for (const auto& [key, c] : directed) {
    const VertexId a{static_cast<std::int32_t>(key >> 32)};
    const VertexId b{static_cast<std::int32_t>(key & 0xffffffffULL)};
    if (!(a < b)) continue;
    const auto opp = directed.find(pair_key(b, a));
    if (opp != directed.end()) best = std::max(best, c * opp->second);
  }
  return best;
}

std::int32_t max_vertex_time(std::span<const Path> paths) {
  int h = 0;
  for (const auto& p : paths) {
    if (!p.empty()) h = std::max(h, static_cast<int>(p.vertices.size()) - 1);
  }
  std::int32_t best = 0;
  for (int t = 0; t <= h; ++t) {
    std::unordered_map<std::int32_t, std::int32_t> here;
    for (const auto& p : paths) {
      if (!p.empty()) best = std::max(best, ++here[p.at(t).index]);
    }
  }
  return best;
}

std::int64_t max_edge_head_to_head_time(std::span<const Path> paths) {
  int h = 0;
  for (const auto& p : paths) {
    if (!p.empty()) h = std::max(h, static_cast<int>(p.vertices.size()) - 1);
  }
  std::int64_t best = 0;
  for (int t = 1; t <= h; ++t) {
    std::unordered_map<std::uint64_t, std::int64_t> moves;
    for (const auto& p : paths) {
      if (p.empty() || p.at(t - 1) == p.at(t)) continue;
      ++moves[pair_key(p.at(t - 1), p.at(t))];
    }
    for (const auto& [key, c] : moves) {
      const VertexId a{static_cast<std::int32_t>(key >> 32)};
      const VertexId b{static_cast<std::int32_t>(key & 0xffffffffULL)};
      if (!(a < b)) continue;
      const auto opp = moves.find(pair_key(b, a));
      if (opp != moves.end()) best = std::max(best, c * opp->second);
    }
  }
  return best;
}

ConflictReport conflict_report(std::span<const Path> paths) {
  ConflictReport r;
  const auto membership = image_membership(paths);
  for (const auto& [v, m] : membership) {
    r.c_single_global = std::max<std::int32_t>(r.c_single_global, static_cast<std::int32_t>(m));
    r.c_path_total += m * (m - 1);
  }
  r.c_path_per_robot.reserve(paths.size());
  for (const auto& p : paths) {
    std::int64_t own = 0;
    for (VertexId v : p.image()) own += membership.at(v.index) - 1;
    r.c_path_per_robot.push_back(own);
  }
  const auto timed = timed_conflicts(paths);
  r.vertex_conflicts_timed = timed.vertex;
  r.edge_conflicts_timed = timed.swap;
  return r;
}

double throughput(std::int64_t goals_reached, std::int64_t elapsed_steps) {
  if (elapsed_steps <= 0) return 0.0;
  return static_cast<double>(goals_reached) / static_cast<double>(elapsed_steps);
}

int makespan(std::span<const Path> paths) {
  int m = 0;
  for (const auto& p : paths) m = std::max(m, p.length());
  return m;
}

std::int64_t sum_of_cost(std::span<const Path> paths) {
  std::int64_t s = 0;
  for (const auto& p : paths) s += p.length();
  return s;
}

std::vector<double> normalize_by_first(std::span<const double> series) {
  std::vector<double> out(series.size(), 0.0);
  if (series.empty()) return out;
  const double first = series.front();
  if (first == 0.0) {
    if (std::all_of(series.begin(), series.end(), [](double x) { return x == 0.0; })) return out;
    throw ArgumentError("cannot normalise a series whose first value is zero");
  }
  for (std::size_t i = 0; i < series.size(); ++i) out[i] = series[i] / first;
  return out;
}

}  // namespace suo
