#include "suo/usage_table.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <type_traits>

#include "json.hpp"
#include "suo/errors.hpp"
#include "suo/rng.hpp"

namespace suo {

void SuoParams::validate() const {
  if (!(beta_v >= 0.0) || !(beta_e >= 0.0)) throw ArgumentError("SU-I weights must be non-negative");
  if (alpha_l < 0 || alpha_h < 0) throw ArgumentError("SU-I windows must be non-negative");
  if (n_robots < 1) throw ArgumentError("SU-I robot count must be at least 1");
}

bool SuoParams::weights_normalized() const { return std::abs(beta_v + beta_e - 1.0) < 1e-12; }

std::size_t UsageTable::EdgeKeyHash::operator()(const EdgeKey& k) const noexcept {
  const auto a = static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.from));
  const auto b = static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.to));
  return static_cast<std::size_t>(mix64((a << 32 | b) ^ mix64(static_cast<std::uint32_t>(k.t))));
}

UsageTable::UsageTable(SuoParams params) : params_(params) { params_.validate(); }

UsageTable UsageTable::build(std::span<const Path> paths, const SuoParams& params) {
  UsageTable table(params);
  for (const Path& p : paths) table.add_path(p);
  return table;
}

std::uint64_t UsageTable::vertex_key(VertexId v, int t) const {
  const auto time = params_.temporal ? static_cast<std::uint32_t>(t) : 0u;
  return (static_cast<std::uint64_t>(time) << 32) | static_cast<std::uint32_t>(v.index);
}

// Calls fn(vertex_key) / fn(EdgeKey) once per counted slot of the path.
template <typename Fn>
void UsageTable::for_each_slot(const Path& path, int time_offset, Fn&& fn) const {
  const auto& vs = path.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const int tau = time_offset + static_cast<int>(i);
    const bool moved = i > 0 && vs[i] != vs[i - 1];
    if (!params_.temporal) {
      fn(vertex_key(vs[i], 0));
      if (moved) fn(EdgeKey{vs[i - 1].index, vs[i].index, 0});
      continue;
    }
    const int lo = std::max(0, tau - params_.alpha_l);
    const int hi = tau + params_.alpha_h;
    for (int t = lo; t <= hi; ++t) {
      fn(vertex_key(vs[i], t));
      if (moved) fn(EdgeKey{vs[i - 1].index, vs[i].index, t});
    }
  }
}

void UsageTable::add_path(const Path& path, int time_offset) {
  if (path.empty()) return;
  for_each_slot(path, time_offset, [this](const auto& key) {
    if constexpr (std::is_same_v<std::decay_t<decltype(key)>, EdgeKey>) {
      ++edge_counts_[key];
    } else {
      ++vertex_counts_[key];
    }
  });
}

void UsageTable::remove_path(const Path& path, int time_offset) {
  if (path.empty()) return;
  std::unordered_map<std::uint64_t, std::int32_t> vdelta;
  std::unordered_map<EdgeKey, std::int32_t, EdgeKeyHash> edelta;
  for_each_slot(path, time_offset, [&](const auto& key) {
    if constexpr (std::is_same_v<std::decay_t<decltype(key)>, EdgeKey>) {
      ++edelta[key];
    } else {
      ++vdelta[key];
    }
  });
  for (const auto& [key, n] : vdelta) {
    auto it = vertex_counts_.find(key);
    if (it == vertex_counts_.end() || it->second < n) {
      throw UnderflowError("removing a path that was never added (vertex count underflow)");
    }
  }
  for (const auto& [key, n] : edelta) {
    auto it = edge_counts_.find(key);
    if (it == edge_counts_.end() || it->second < n) {
      throw UnderflowError("removing a path that was never added (edge count underflow)");
    }
  }
  for (const auto& [key, n] : vdelta) {
    auto it = vertex_counts_.find(key);
    if ((it->second -= n) == 0) vertex_counts_.erase(it);
  }
  for (const auto& [key, n] : edelta) {
    auto it = edge_counts_.find(key);
    if ((it->second -= n) == 0) edge_counts_.erase(it);
  }
}

std::int32_t UsageTable::vertex_use(VertexId v, int t) const {
  if (params_.temporal && t < 0) return 0;
  auto it = vertex_counts_.find(vertex_key(v, t));
  return it == vertex_counts_.end() ? 0 : it->second;
}

std::int32_t UsageTable::edge_use(VertexId from, VertexId to, int t) const {
  if (params_.temporal && t < 0) return 0;
  auto it = edge_counts_.find(EdgeKey{from.index, to.index, params_.temporal ? t : 0});
  return it == edge_counts_.end() ? 0 : it->second;
}

double UsageTable::h_suo(VertexId from, VertexId to, int t) const {
  const double n = params_.n_robots;
  double h = 0.0;
  if (params_.beta_v != 0.0) h += params_.beta_v * vertex_use(to, t) / n;
  if (params_.beta_e != 0.0 && from != to) h += params_.beta_e * edge_use(to, from, t) / n;
  return h;
}

void UsageTable::merge(const UsageTable& other) {
  if (other.params_.temporal != params_.temporal) throw ArgumentError("cannot merge tables of different modes");
  for (const auto& [k, n] : other.vertex_counts_) vertex_counts_[k] += n;
  for (const auto& [k, n] : other.edge_counts_) edge_counts_[k] += n;
}

void UsageTable::clear() {
  vertex_counts_.clear();
  edge_counts_.clear();
}

std::string UsageTable::to_json() const {
  using Row = std::vector<std::int64_t>;
  std::vector<Row> vrows;
  std::vector<Row> erows;
  for (const auto& [k, n] : vertex_counts_) {
    vrows.push_back({static_cast<std::int64_t>(k & 0xffffffffu), static_cast<std::int64_t>(k >> 32), n});
  }
  for (const auto& [k, n] : edge_counts_) erows.push_back({k.from, k.to, k.t, n});
  std::sort(vrows.begin(), vrows.end());
  std::sort(erows.begin(), erows.end());
  nlohmann::json j;
  j["params"] = {{"beta_v", params_.beta_v},   {"beta_e", params_.beta_e},     {"alpha_l", params_.alpha_l},
                 {"alpha_h", params_.alpha_h}, {"temporal", params_.temporal}, {"n_robots", params_.n_robots}};
  j["vertex"] = vrows;  // [vertex, time, count]
  j["edge"] = erows;    // [from, to, time, count]
  return j.dump();
}

}  // namespace suo
