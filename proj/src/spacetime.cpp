#include "suo/spacetime.hpp"

#include <algorithm>
#include <memory>
#include <queue>

#include "suo/errors.hpp"
#include "suo/rng.hpp"

namespace suo {

std::size_t ReservationTable::MoveKeyHash::operator()(const MoveKey& k) const noexcept {
  const std::uint64_t a = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.from)) << 32) |
                          static_cast<std::uint32_t>(k.to);
  return static_cast<std::size_t>(mix64(a ^ mix64(static_cast<std::uint32_t>(k.t))));
}

void ReservationTable::reserve(const Path& path, int last_time, bool rest_forever) {
  if (path.empty()) return;
  for (int t = 0; t <= last_time; ++t) {
    const VertexId v = path.at(t);
    vertices_.insert(key(v, t));
    auto& last = last_use_[v.index];
    last = std::max(last, t);
    if (t > 0 && path.at(t - 1) != v) moves_.insert(MoveKey{path.at(t - 1).index, v.index, t});
  }
  if (rest_forever) {
    const int from = std::min(path.length(), last_time);
    auto [it, inserted] = rest_from_.try_emplace(path.back().index, from);
    if (!inserted) it->second = std::min(it->second, from);
  }
  max_time_ = std::max(max_time_, last_time);
}

void ReservationTable::clear() {
  vertices_.clear();
  moves_.clear();
  last_use_.clear();
  rest_from_.clear();
  max_time_ = 0;
}

bool ReservationTable::vertex_free(VertexId v, int t) const {
  if (vertices_.contains(key(v, t))) return false;
  const auto rest = rest_from_.find(v.index);
  return rest == rest_from_.end() || t < rest->second;
}

bool ReservationTable::move_free(VertexId from, VertexId to, int t) const {
  if (!vertex_free(to, t)) return false;
  return from == to || !moves_.contains(MoveKey{to.index, from.index, t});
}

bool ReservationTable::can_hold(VertexId v, int t) const {
  if (rest_from_.contains(v.index)) return false;
  const auto last = last_use_.find(v.index);
  return last == last_use_.end() || last->second < t;
}

namespace {

constexpr int kBeyond = -1;

struct StateKey {
  std::int32_t v;
  std::int32_t t;  // kBeyond past the window
  std::int32_t k;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& s) const noexcept {
    const std::uint64_t a = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.v)) << 32) |
                            static_cast<std::uint32_t>(s.t);
    return static_cast<std::size_t>(mix64(a ^ mix64(static_cast<std::uint32_t>(s.k))));
  }
};

struct Node {
  VertexId v;
  int t;
  int k;
  int parent;
};

struct Entry {
  std::int64_t f;
  int g;
  std::uint64_t tie;
  std::uint64_t seq;
  int node;
};

struct LowerPriority {
  bool operator()(const Entry& a, const Entry& b) const {
    if (a.f != b.f) return a.f > b.f;
    if (a.g != b.g) return a.g < b.g;
    if (a.tie != b.tie) return a.tie > b.tie;
    return a.seq > b.seq;
  }
};

}  // namespace

SpaceTimeResult plan_space_time(const GridMap& map, DistanceOracle& distances, const ReservationTable& reservations,
                                const SpaceTimeQuery& query) {
  if (!map.passable(query.start)) throw ArgumentError("space-time start must be a free vertex");
  std::vector<VertexId> targets = query.targets;
  if (targets.empty()) targets.push_back(query.start);
  const int K = static_cast<int>(targets.size());

  std::vector<std::shared_ptr<const DistanceField>> fields;
  fields.reserve(targets.size());
  for (VertexId g : targets) fields.push_back(distances.field(g));
  // suffix[k]: distance from targets[k] through the rest of the chain.
  std::vector<std::int64_t> suffix(targets.size() + 1, 0);
  for (int k = K - 2; k >= 0; --k) {
    const auto hop = fields[static_cast<std::size_t>(k + 1)]->at(targets[static_cast<std::size_t>(k)]);
    if (hop == DistanceField::kUnreachable) return {};
    suffix[static_cast<std::size_t>(k)] = suffix[static_cast<std::size_t>(k + 1)] + hop;
  }
  auto heuristic = [&](VertexId v, int k) -> std::int64_t {
    if (k >= K) return fields.back()->at(v);  // must end on the last target
    const auto d = fields[static_cast<std::size_t>(k)]->at(v);
    if (d == DistanceField::kUnreachable) return -1;
    return d + suffix[static_cast<std::size_t>(k)];
  };
  auto advance = [&](VertexId v, int k) {
    while (k < K && targets[static_cast<std::size_t>(k)] == v) ++k;
    return k;
  };

  SpaceTimeResult result;
  std::vector<Node> nodes;
  std::unordered_set<StateKey, StateKeyHash> seen;
  std::priority_queue<Entry, std::vector<Entry>, LowerPriority> open;
  std::uint64_t seq = 0;
  const std::uint64_t seed_key = mix64(query.seed ^ 0x2545f4914f6cdd1dULL);

  auto push = [&](VertexId v, int t, int k, int parent) {
    const StateKey key{v.index, t > query.window ? kBeyond : t, k};
    if (!seen.insert(key).second) return;
    const auto h = heuristic(v, k);
    if (h < 0) return;
    nodes.push_back(Node{v, t, k, parent});
    const std::uint64_t tie = mix64(StateKeyHash{}(key) ^ seed_key);
    open.push(Entry{t + h, t, tie, seq++, static_cast<int>(nodes.size() - 1)});
  };

  push(query.start, 0, advance(query.start, 0), -1);
  int found = -1;
  while (!open.empty()) {
    const Entry top = open.top();
    open.pop();
    const Node cur = nodes[static_cast<std::size_t>(top.node)];
    ++result.expanded;
    if (cur.k >= K && cur.v == targets.back() && (cur.t > query.window || reservations.can_hold(cur.v, cur.t))) {
      found = top.node;
      break;
    }
    const int t_next = cur.t + 1;
    const bool inside = t_next <= query.window;
    if (inside && t_next > query.time_limit) continue;
    auto relax = [&](VertexId u) {
      if (inside && !reservations.move_free(cur.v, u, t_next)) return;
      push(u, t_next, advance(u, cur.k), top.node);
    };
    for (VertexId u : map.neighbors(cur.v)) relax(u);
    if (cur.t < query.window) relax(cur.v);  // no waits past the window
  }
  if (found < 0) return result;

  for (int n = found; n >= 0; n = nodes[static_cast<std::size_t>(n)].parent) {
    result.path.vertices.push_back(nodes[static_cast<std::size_t>(n)].v);
  }
  std::reverse(result.path.vertices.begin(), result.path.vertices.end());
  result.found = true;
  return result;
}

}  // namespace suo
