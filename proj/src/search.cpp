#include "suo/search.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>

#include "suo/errors.hpp"
#include "suo/kernels.hpp"
#include "suo/rng.hpp"

namespace suo {

namespace {

struct Node {
  VertexId v;
  int t = 0;      // clock value
  int steps = 0;  // transitions from the start
  double surcharge = 0.0;
  int parent = -1;
};

// Priority: (major, minor) lexicographic, then deeper first, then a seeded
// per-state key, then insertion order.
struct OpenEntry {
  std::int64_t major;
  double minor;
  int steps;
  std::uint64_t tie;
  std::uint64_t seq;
  int node;
};

struct LowerPriority {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.major != b.major) return a.major > b.major;
    if (a.minor != b.minor) return a.minor > b.minor;
    if (a.steps != b.steps) return a.steps < b.steps;
    if (a.tie != b.tie) return a.tie > b.tie;
    return a.seq > b.seq;
  }
};

struct StateInfo {
  std::int64_t major;
  double minor;
  int steps;
  bool closed = false;
};

bool better(std::int64_t major, double minor, int steps, const StateInfo& s) {
  if (major != s.major) return major < s.major;
  if (minor != s.minor) return minor < s.minor;
  return steps > s.steps;
}

Path run_search(const GridMap& map, VertexId start, VertexId goal, const UsageTable& table,
                const DistanceField& field, const SearchConfig& cfg, bool cost_to_come, int max_pair_dist,
                SearchStats* stats_out) {
  if (!map.passable(start) || !map.passable(goal)) throw ArgumentError("search endpoints must be free vertices");
  if (field.goal() != goal) throw ArgumentError("distance field does not belong to the goal");
  if (!field.reachable(start)) throw NoPathError("goal unreachable from start");

  const SuoParams& params = table.params();
  const bool temporal = params.temporal;
  const bool normalized = params.weights_normalized();
  const int max_time = cfg.max_time > 0 ? cfg.max_time : field.at(start) + 2 * (params.alpha_l + params.alpha_h) + 10;
  const double scale = 1.0 / (static_cast<double>(std::max(max_pair_dist, 0)) + 1.0);
  const std::uint64_t seed_key = mix64(cfg.tie_break_seed ^ 0x7fb5d329728ea185ULL);

  auto state_key = [&](VertexId v, int t) -> std::uint64_t {
    if (!temporal) return static_cast<std::uint32_t>(v.index);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t)) << 32) | static_cast<std::uint32_t>(v.index);
  };

  SearchStats stats;
  std::vector<Node> nodes;
  std::unordered_map<std::uint64_t, StateInfo> states;
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, LowerPriority> open;
  std::uint64_t seq = 0;

  auto push = [&](const Node& node, std::int64_t major, double minor) {
    const auto key = state_key(node.v, node.t);
    auto [it, inserted] = states.try_emplace(key, StateInfo{major, minor, node.steps});
    if (!inserted) {
      if (it->second.closed || !better(major, minor, node.steps, it->second)) return;
      it->second.major = major;
      it->second.minor = minor;
      it->second.steps = node.steps;
    }
    nodes.push_back(node);
    open.push(OpenEntry{major, minor, node.steps, mix64(key ^ seed_key), seq++, static_cast<int>(nodes.size() - 1)});
    ++stats.generated;
  };

  push(Node{start, cfg.start_time, 0, 0.0, -1}, field.at(start), 0.0);

  int found = -1;
  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    const Node cur = nodes[top.node];
    auto& info = states[state_key(cur.v, cur.t)];
    if (info.closed) continue;
    if (top.major != info.major || top.minor != info.minor || top.steps != info.steps) continue;  // stale
    info.closed = true;
    ++stats.expanded;
    if (!cost_to_come && !(top.minor < 1.0)) ++stats.priority_bound_violations;
    if (cur.v == goal) {
      found = top.node;
      break;
    }

    const int t_next = cur.t + 1;
    if (temporal && t_next - cfg.start_time > max_time) continue;
    auto relax = [&](VertexId u) {
      const std::int32_t hu = field.at(u);
      if (hu == DistanceField::kUnreachable) return;
      const double h = table.h_suo(cur.v, u, t_next);
      ++stats.h_evaluations;
      if (normalized && !(h >= 0.0 && h < 1.0)) ++stats.h_bound_violations;
      Node next{u, t_next, cur.steps + 1, 0.0, top.node};
      const std::int64_t major = static_cast<std::int64_t>(next.steps) + hu;
      if (cost_to_come) {
        next.surcharge = cur.surcharge + h * scale;
        push(next, major, next.surcharge);
      } else {
        push(next, major, h);
      }
    };
    for (VertexId u : map.neighbors(cur.v)) relax(u);
    if (temporal) relax(cur.v);
  }

  if (stats_out) *stats_out += stats;
  if (found < 0) throw NoPathError("search exhausted its time bound before reaching the goal");

  Path path;
  for (int n = found; n >= 0; n = nodes[n].parent) path.vertices.push_back(nodes[n].v);
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

}  // namespace

Path find_path_cost_to_go(const GridMap& map, VertexId start, VertexId goal, const UsageTable& table,
                          const DistanceField& field, const SearchConfig& cfg, SearchStats* stats) {
  return run_search(map, start, goal, table, field, cfg, false, 0, stats);
}

Path find_path_cost_to_come(const GridMap& map, VertexId start, VertexId goal, const UsageTable& table,
                            const DistanceField& field, int max_pair_dist, const SearchConfig& cfg,
                            SearchStats* stats) {
  return run_search(map, start, goal, table, field, cfg, true, max_pair_dist, stats);
}

std::vector<std::size_t> order_robots(std::span<const std::int32_t> distances) {
  return order_robots(distances, OrderPolicy::descending, 0);
}

std::vector<std::size_t> order_robots(std::span<const std::int32_t> distances, OrderPolicy policy,
                                      std::uint64_t seed) {
  std::vector<std::size_t> order(distances.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  switch (policy) {
    case OrderPolicy::descending:
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return distances[a] > distances[b]; });
      break;
    case OrderPolicy::ascending:
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return distances[a] < distances[b]; });
      break;
    case OrderPolicy::random: {
      Rng rng(derive_seed(seed, 0x0de5ULL));
      rng.shuffle(std::span<std::size_t>(order));
      break;
    }
  }
  return order;
}

IndependentPlan plan_independent_paths(const GridMap& map, std::span<const StartGoal> tasks, const SearchConfig& cfg,
                                       const IndependentPlanOptions& options) {
  std::vector<VertexId> goals;
  goals.reserve(tasks.size());
  for (const auto& t : tasks) goals.push_back(t.goal);
  const auto fields = kernels::parallel::distance_fields(map, goals);
  return plan_independent_paths(map, tasks, fields, cfg, options);
}

IndependentPlan plan_independent_paths(const GridMap& map, std::span<const StartGoal> tasks,
                                       std::span<const DistanceField> fields, const SearchConfig& cfg,
                                       const IndependentPlanOptions& options) {
  const std::size_t n = tasks.size();
  if (fields.size() != n) throw ArgumentError("one distance field per robot required");
  if (options.iterations < 0) throw ArgumentError("iteration count must be non-negative");

  std::vector<std::int32_t> dist(n);
  std::int32_t max_pair_dist = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!map.passable(tasks[i].start) || !fields[i].reachable(tasks[i].start)) {
      throw InstanceError("robot " + std::to_string(i) + ": goal unreachable from start");
    }
    dist[i] = fields[i].at(tasks[i].start);
    max_pair_dist = std::max(max_pair_dist, dist[i]);
  }

  IndependentPlan plan;
  plan.order = order_robots(dist, options.order, options.order_seed);
  plan.paths.assign(n, Path{});

  SuoParams params = cfg.suo;
  params.n_robots = std::max<int>(1, static_cast<int>(n));
  auto search = [&](std::size_t i, const UsageTable& table, std::uint64_t stream) {
    SearchConfig c = cfg;
    c.tie_break_seed = derive_seed(cfg.tie_break_seed, stream);
    if (cfg.mode == SearchMode::cost_to_come) {
      return find_path_cost_to_come(map, tasks[i].start, tasks[i].goal, table, fields[i], max_pair_dist, c,
                                    &plan.stats);
    }
    return find_path_cost_to_go(map, tasks[i].start, tasks[i].goal, table, fields[i], c, &plan.stats);
  };

  if (options.iterations == 0) {
    SuoParams plain = params;
    plain.temporal = false;
    const UsageTable empty(plain);
    for (std::size_t i : plan.order) plan.paths[i] = search(i, empty, i);
    if (options.on_iteration) options.on_iteration(0, plan.paths);
    return plan;
  }

  UsageTable table(params);
  for (int it = 1; it <= options.iterations; ++it) {
    for (std::size_t i : plan.order) {
      if (!plan.paths[i].empty()) table.remove_path(plan.paths[i], cfg.start_time);
      plan.paths[i] = search(i, table, static_cast<std::uint64_t>(it) * n + i);
      table.add_path(plan.paths[i], cfg.start_time);
    }
    if (options.on_iteration) options.on_iteration(it, plan.paths);
  }
  return plan;
}

}  // namespace suo
