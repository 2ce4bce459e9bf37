#include "suo/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <unordered_map>

namespace suo::kernels {

namespace {

std::atomic<int> g_workers{0};

int horizon(std::span<const Path> paths) {
  int h = 0;
  for (const auto& p : paths) {
    if (!p.empty()) h = std::max(h, static_cast<int>(p.vertices.size()) - 1);
  }
  return h;
}

std::uint64_t move_key(VertexId a, VertexId b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a.index)) << 32) |
         static_cast<std::uint32_t>(b.index);
}

// All conflicts whose time stamp is t.
void conflicts_at(std::span<const Path> paths, int t, std::vector<Conflict>& out) {
  std::vector<std::pair<VertexId, int>> here;
  here.reserve(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (!paths[i].empty()) here.emplace_back(paths[i].at(t), static_cast<int>(i));
  }
  std::sort(here.begin(), here.end());
  for (std::size_t lo = 0; lo < here.size();) {
    std::size_t hi = lo;
    while (hi < here.size() && here[hi].first == here[lo].first) ++hi;
    for (std::size_t x = lo; x < hi; ++x) {
      for (std::size_t y = x + 1; y < hi; ++y) {
        out.push_back(Conflict{ConflictType::vertex, here[x].second, here[y].second, t, here[lo].first, VertexId{}});
      }
    }
    lo = hi;
  }
  if (t == 0) return;

  std::unordered_map<std::uint64_t, std::vector<int>> moves;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].empty()) continue;
    const VertexId a = paths[i].at(t - 1);
    const VertexId b = paths[i].at(t);
    if (a != b) moves[move_key(a, b)].push_back(static_cast<int>(i));
  }
  for (const auto& [key, robots] : moves) {
    const VertexId a{static_cast<std::int32_t>(key >> 32)};
    const VertexId b{static_cast<std::int32_t>(key & 0xffffffffULL)};
    const auto opp = moves.find(move_key(b, a));
    if (opp == moves.end()) continue;
    for (int i : robots) {
      for (int j : opp->second) {
        if (i < j) out.push_back(Conflict{ConflictType::swap, i, j, t, a, b});
      }
    }
  }
}

}  // namespace

int worker_count() {
  int n = g_workers.load();
  if (n > 0) return n;
  n = omp_get_max_threads();
  if (const char* env = std::getenv("SUO_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) n = v;
    } catch (const std::exception&) {
    }
  }
  g_workers.store(n);
  return n;
}

void set_worker_count(int n) { g_workers.store(std::max(1, n)); }

namespace serial {

std::vector<Conflict> find_conflicts(std::span<const Path> paths) {
  std::vector<Conflict> out;
  const int h = horizon(paths);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].empty()) continue;
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (paths[j].empty()) continue;
      const auto& p = paths[i];
      const auto& q = paths[j];
      for (int t = 0; t <= h; ++t) {
        if (p.at(t) == q.at(t)) {
          out.push_back(Conflict{ConflictType::vertex, static_cast<int>(i), static_cast<int>(j), t, p.at(t), VertexId{}});
        }
        if (t > 0 && p.at(t - 1) != p.at(t) && p.at(t - 1) == q.at(t) && p.at(t) == q.at(t - 1)) {
          out.push_back(
              Conflict{ConflictType::swap, static_cast<int>(i), static_cast<int>(j), t, p.at(t - 1), p.at(t)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t path_overlap_total(std::span<const Path> paths) {
  std::vector<std::vector<VertexId>> images;
  images.reserve(paths.size());
  for (const auto& p : paths) images.push_back(p.image());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      std::vector<VertexId> both;
      std::set_intersection(images[i].begin(), images[i].end(), images[j].begin(), images[j].end(),
                            std::back_inserter(both));
      total += 2 * static_cast<std::int64_t>(both.size());
    }
  }
  return total;
}

std::vector<DistanceField> distance_fields(const GridMap& map, std::span<const VertexId> goals) {
  std::vector<DistanceField> out;
  out.reserve(goals.size());
  for (VertexId g : goals) out.push_back(distance_field(map, g));
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<Conflict> find_conflicts(std::span<const Path> paths) {
  const int h = horizon(paths);
  const int workers = worker_count();
  std::vector<std::vector<Conflict>> per_thread(static_cast<std::size_t>(workers));
#pragma omp parallel for num_threads(workers) schedule(dynamic, 16)
  for (int t = 0; t <= h; ++t) {
    conflicts_at(paths, t, per_thread[static_cast<std::size_t>(omp_get_thread_num())]);
  }
  std::vector<Conflict> out;
  for (auto& part : per_thread) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t path_overlap_total(std::span<const Path> paths) {
  const int n = static_cast<int>(paths.size());
  std::vector<std::vector<VertexId>> images(paths.size());
  const int workers = worker_count();
#pragma omp parallel for num_threads(workers) schedule(dynamic, 8)
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = paths[static_cast<std::size_t>(i)].image();

  std::unordered_map<std::int32_t, std::int64_t> counts;
  for (const auto& img : images) {
    for (VertexId v : img) ++counts[v.index];
  }
  std::int64_t total = 0;
  for (const auto& [v, m] : counts) total += m * (m - 1);
  return total;
}

std::vector<DistanceField> distance_fields(const GridMap& map, std::span<const VertexId> goals) {
  std::vector<DistanceField> out(goals.size());
  const int n = static_cast<int>(goals.size());
  const int workers = worker_count();
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = distance_field(map, goals[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace parallel

}  // namespace suo::kernels
