#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>

#include "suo/graph.hpp"
#include "suo/path.hpp"

namespace suo {

struct SuoParams {
  double beta_v = 0.5;
  double beta_e = 0.5;
  int alpha_l = 0;  // window reaching back from an occupancy
  int alpha_h = 0;  // window reaching forward from an occupancy
  bool temporal = false;
  int n_robots = 1;

  // Throws ArgumentError on negative weights/windows or n_robots < 1.
  void validate() const;
  bool weights_normalized() const;
};

// Occupancy counts of vertices and directed edges, optionally per time step.
//
// Temporal mode: an occupancy at time t counts at every query time t' with
// t - alpha_l <= t' <= t + alpha_h (t' >= 0). An edge traversal is keyed by the
// arrival time. Aggregate mode ignores time: one count per time step a path
// spends on a vertex, one per traversal of an edge. Waits add no edge counts.
class UsageTable {
 public:
  explicit UsageTable(SuoParams params = {});

  // Empty paths are skipped.
  static UsageTable build(std::span<const Path> paths, const SuoParams& params);

  // time_offset shifts the path's clock (path index 0 happens at time_offset).
  void add_path(const Path& path, int time_offset = 0);
  // Throws UnderflowError, leaving the table untouched, if the path was not added.
  void remove_path(const Path& path, int time_offset = 0);

  std::int32_t vertex_use(VertexId v, int t = 0) const;
  std::int32_t edge_use(VertexId from, VertexId to, int t = 0) const;

  // beta_v*T(to,t)/n + beta_e*T(to->from,t)/n. The edge term looks up the reversed
  // edge (head-to-head exposure) and is zero for waits.
  double h_suo(VertexId from, VertexId to, int t = 0) const;

  // Adds every count of other (same params required).
  void merge(const UsageTable& other);
  void clear();

  const SuoParams& params() const { return params_; }
  void set_n_robots(int n) { params_.n_robots = n; }
  bool empty() const { return vertex_counts_.empty() && edge_counts_.empty(); }
  std::size_t vertex_entries() const { return vertex_counts_.size(); }
  std::size_t edge_entries() const { return edge_counts_.size(); }

  // Deterministic dump with sorted entries.
  std::string to_json() const;

  friend bool operator==(const UsageTable& a, const UsageTable& b) {
    return a.vertex_counts_ == b.vertex_counts_ && a.edge_counts_ == b.edge_counts_;
  }

 private:
  struct EdgeKey {
    std::int32_t from;
    std::int32_t to;
    std::int32_t t;
    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
  };
  struct EdgeKeyHash {
    std::size_t operator()(const EdgeKey& k) const noexcept;
  };

  std::uint64_t vertex_key(VertexId v, int t) const;
  template <typename Fn>
  void for_each_slot(const Path& path, int time_offset, Fn&& fn) const;

  SuoParams params_;
  std::unordered_map<std::uint64_t, std::int32_t> vertex_counts_;
  std::unordered_map<EdgeKey, std::int32_t, EdgeKeyHash> edge_counts_;
};

}  // namespace suo
