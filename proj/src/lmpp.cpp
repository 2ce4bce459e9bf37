#include "suo/lmpp.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <limits>
#include <memory>
#include <unordered_map>

#include "suo/errors.hpp"
#include "suo/kernels.hpp"
#include "suo/spacetime.hpp"

namespace suo {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Shortest-path walk of h steps through the chain, ignoring other robots.
Path greedy_walk(const GridMap& map, DistanceOracle& distances, VertexId start, std::span<const VertexId> targets,
                 int h) {
  Path p{{start}};
  std::size_t k = 0;
  VertexId v = start;
  for (int t = 1; t <= h; ++t) {
    while (k < targets.size() && targets[k] == v) ++k;
    if (k < targets.size()) {
      const auto field = distances.field(targets[k]);
      for (VertexId u : map.neighbors(v)) {
        if (field->at(u) == field->at(v) - 1) {
          v = u;
          break;
        }
      }
    }
    p.vertices.push_back(v);
  }
  return p;
}

Path fit_to_horizon(Path p, int h) {
  Path out;
  out.vertices.reserve(static_cast<std::size_t>(h) + 1);
  for (int t = 0; t <= h; ++t) out.vertices.push_back(p.at(t));
  return out;
}

}  // namespace

GoalStream GoalStream::random(const GridMap& map, std::size_t robots, std::uint64_t seed) {
  auto free = std::make_shared<std::vector<VertexId>>(map.vertices());
  if (free->empty()) throw ArgumentError("goal stream needs at least one free vertex");
  GoalStream s;
  s.queues_.resize(robots);
  s.last_issued_.assign(robots, VertexId{});
  for (std::size_t r = 0; r < robots; ++r) s.rngs_.emplace_back(derive_seed(seed, r));
  s.generator_ = [free](std::size_t, VertexId previous, Rng& rng) {
    if (free->size() == 1) return free->front();
    for (;;) {
      const VertexId g = (*free)[rng.below(free->size())];
      if (g != previous) return g;
    }
  };
  return s;
}

GoalStream GoalStream::cyclic(std::vector<std::vector<VertexId>> patterns) {
  for (const auto& p : patterns) {
    if (p.empty()) throw ArgumentError("cyclic goal pattern must not be empty");
  }
  GoalStream s;
  const std::size_t robots = patterns.size();
  s.queues_.resize(robots);
  s.last_issued_.assign(robots, VertexId{});
  for (std::size_t r = 0; r < robots; ++r) s.rngs_.emplace_back(r);
  auto shared = std::make_shared<std::vector<std::vector<VertexId>>>(std::move(patterns));
  auto cursor = std::make_shared<std::vector<std::size_t>>(robots, 0);
  s.generator_ = [shared, cursor](std::size_t robot, VertexId, Rng&) {
    const auto& pattern = (*shared)[robot];
    auto& c = (*cursor)[robot];
    const VertexId g = pattern[c % pattern.size()];
    ++c;
    return g;
  };
  return s;
}

GoalStream GoalStream::fixed(std::vector<std::vector<VertexId>> lists) {
  GoalStream s;
  s.queues_.resize(lists.size());
  s.last_issued_.assign(lists.size(), VertexId{});
  for (std::size_t r = 0; r < lists.size(); ++r) {
    s.rngs_.emplace_back(r);
    s.queues_[r].assign(lists[r].begin(), lists[r].end());
    if (!lists[r].empty()) s.last_issued_[r] = lists[r].back();
    s.issued_ += static_cast<std::int64_t>(lists[r].size());
  }
  return s;
}

bool GoalStream::ensure(std::size_t robot, std::size_t count) {
  if (robot >= queues_.size()) throw ArgumentError("robot index out of range");
  auto& q = queues_[robot];
  while (q.size() < count) {
    if (!generator_) return false;
    const VertexId g = generator_(robot, last_issued_[robot], rngs_[robot]);
    q.push_back(g);
    last_issued_[robot] = g;
    ++issued_;
  }
  return true;
}

VertexId GoalStream::pop(std::size_t robot) {
  if (robot >= queues_.size()) throw ArgumentError("robot index out of range");
  auto& q = queues_[robot];
  if (q.empty()) throw UnderflowError("goal queue is empty");
  const VertexId g = q.front();
  q.pop_front();
  return g;
}

TruncatedGoals truncate_goal_list(VertexId state, std::span<const VertexId> goals, int h, DistanceOracle& distances) {
  if (h < 1) throw ArgumentError("horizon must be at least 1");
  TruncatedGoals out;
  out.chain.push_back(state);
  for (VertexId g : goals) {
    if (out.distance >= h) break;
    const auto hop = distances.distance(out.chain.back(), g);
    if (hop == DistanceField::kUnreachable) throw InstanceError("consecutive goals are not mutually reachable");
    out.chain.push_back(g);
    out.distance += hop;
  }
  return out;
}

CutTarget horizon_cut_target(const GridMap& map, VertexId leg_start, VertexId leg_end, int chain_distance, int h,
                             DistanceOracle& distances, const UsageTable* table, std::uint64_t seed) {
  const auto field = distances.field(leg_end);
  const int L = field->at(leg_start);
  if (L == DistanceField::kUnreachable) throw InstanceError("leg end unreachable from leg start");
  const int idx = std::clamp(h - (chain_distance - L) + 1, 0, L);

  SearchConfig cfg;
  cfg.mode = SearchMode::cost_to_go;
  cfg.tie_break_seed = seed;
  CutTarget out;
  if (table) {
    cfg.suo = table->params();
    cfg.start_time = chain_distance - L;
    out.leg = find_path_cost_to_go(map, leg_start, leg_end, *table, *field, cfg);
  } else {
    const UsageTable empty;
    out.leg = find_path_cost_to_go(map, leg_start, leg_end, empty, *field, cfg);
  }
  out.leg_index = idx;
  out.target = out.leg.at(idx);
  return out;
}

namespace {

// Earliest pair (i, j) colliding at some t <= h, or (-1, -1).
std::pair<int, int> first_conflict(const std::vector<Path>& paths, int h) {
  std::unordered_map<std::int32_t, int> at;
  std::unordered_map<std::uint64_t, int> moves;
  for (int t = 0; t <= h; ++t) {
    at.clear();
    moves.clear();
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const VertexId v = paths[i].at(t);
      const auto [it, fresh] = at.try_emplace(v.index, static_cast<int>(i));
      if (!fresh) return {it->second, static_cast<int>(i)};
      if (t == 0) continue;
      const VertexId u = paths[i].at(t - 1);
      if (u == v) continue;
      const auto key = [](VertexId a, VertexId b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a.index)) << 32) |
               static_cast<std::uint32_t>(b.index);
      };
      if (const auto opp = moves.find(key(v, u)); opp != moves.end()) return {opp->second, static_cast<int>(i)};
      moves.emplace(key(u, v), static_cast<int>(i));
    }
  }
  return {-1, -1};
}

bool collide(const Path& a, const Path& b, int h) {
  for (int t = 0; t <= h; ++t) {
    if (a.at(t) == b.at(t)) return true;
    if (t > 0 && a.at(t - 1) != a.at(t) && a.at(t - 1) == b.at(t) && a.at(t) == b.at(t - 1)) return true;
  }
  return false;
}

struct PbsNode {
  std::vector<Path> paths;
  std::vector<std::vector<char>> above;  // above[k][a]: a outranks k
  std::int64_t cost = 0;
};

struct PbsResult {
  std::vector<Path> paths;
  bool found = false;
  std::int64_t expanded = 0;
};

// Depth-first search over pairwise priorities. Each node holds one path per
// robot planned against the robots that outrank it; a conflict at t <= h
// branches on which of the two robots goes first.
PbsResult priority_based_search(const GridMap& map, DistanceOracle& distances, std::span<const VertexId> state,
                                std::span<const std::vector<VertexId>> targets, int h, std::uint64_t seed,
                                int max_nodes) {
  const std::size_t n = state.size();
  PbsResult out;
  auto plan = [&](std::size_t k, const PbsNode& node, Path& result) {
    ReservationTable res;
    for (std::size_t a = 0; a < n; ++a) {
      if (node.above[k][a]) res.reserve(node.paths[a], h, false);
    }
    SpaceTimeQuery q;
    q.start = state[k];
    q.targets = targets[k];
    q.window = h;
    q.seed = derive_seed(seed, k);
    auto r = plan_space_time(map, distances, res, q);
    out.expanded += r.expanded;
    if (r.found) result = std::move(r.path);
    return r.found;
  };
  auto cost_of = [](const std::vector<Path>& paths) {
    std::int64_t c = 0;
    for (const auto& p : paths) c += static_cast<std::int64_t>(p.vertices.size());
    return c;
  };

  PbsNode root;
  root.paths.resize(n);
  root.above.assign(n, std::vector<char>(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    if (!plan(k, root, root.paths[k])) return out;
  }
  root.cost = cost_of(root.paths);

  std::vector<PbsNode> stack;
  stack.push_back(std::move(root));
  for (int expanded = 0; !stack.empty() && expanded < max_nodes; ++expanded) {
    PbsNode node = std::move(stack.back());
    stack.pop_back();
    const auto [i, j] = first_conflict(node.paths, h);
    if (i < 0) {
      out.paths = std::move(node.paths);
      out.found = true;
      return out;
    }

    std::vector<PbsNode> children;
    for (const auto& [hi, lo] : {std::pair{i, j}, std::pair{j, i}}) {
      const auto uhi = static_cast<std::size_t>(hi);
      const auto ulo = static_cast<std::size_t>(lo);
      if (node.above[uhi][ulo]) continue;  // lo already outranks hi
      PbsNode child = node;
      std::vector<std::size_t> affected;
      for (std::size_t d = 0; d < n; ++d) {
        if (d == ulo || node.above[d][ulo]) affected.push_back(d);
      }
      for (std::size_t d : affected) {
        child.above[d][uhi] = 1;
        for (std::size_t a = 0; a < n; ++a) {
          if (node.above[uhi][a]) child.above[d][a] = 1;
        }
      }
      // Fewer ancestors first is a topological order.
      std::vector<std::size_t> rank(n, 0);
      for (std::size_t d : affected) {
        rank[d] = static_cast<std::size_t>(std::count(child.above[d].begin(), child.above[d].end(), 1));
      }
      std::stable_sort(affected.begin(), affected.end(), [&](std::size_t x, std::size_t y) { return rank[x] < rank[y]; });
      bool ok = true;
      for (std::size_t k : affected) {
        bool stale = k == ulo;
        for (std::size_t a = 0; a < n && !stale; ++a) {
          stale = child.above[k][a] && collide(child.paths[k], child.paths[a], h);
        }
        if (stale && !plan(k, child, child.paths[k])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      child.cost = cost_of(child.paths);
      children.push_back(std::move(child));
    }
    // The cheaper child is explored first.
    std::sort(children.begin(), children.end(), [](const PbsNode& a, const PbsNode& b) { return a.cost > b.cost; });
    for (auto& c : children) stack.push_back(std::move(c));
  }
  return out;
}

}  // namespace

WindowedSolution windowed_solver(const GridMap& map, DistanceOracle& distances, std::span<const VertexId> state,
                                 std::span<const std::vector<VertexId>> targets, int h,
                                 const WindowedSolverConfig& cfg) {
  if (h < 1) throw ArgumentError("horizon must be at least 1");
  if (state.size() != targets.size()) throw ArgumentError("one target list per robot required");
  const std::size_t n = state.size();

  WindowedSolution out;
  const int max_nodes = cfg.max_nodes > 0 ? cfg.max_nodes : static_cast<int>(n + 20);
  for (int attempt = 0; attempt < std::max(0, cfg.max_retries); ++attempt) {
    ++out.attempts;
    auto r = priority_based_search(map, distances, state, targets, h,
                                   derive_seed(cfg.seed, static_cast<std::uint64_t>(attempt)), max_nodes);
    out.expanded += r.expanded;
    if (r.found) {
      out.paths.clear();
      for (auto& p : r.paths) out.paths.push_back(fit_to_horizon(std::move(p), h));
      return out;
    }
  }
  out.paths = pibt_rollout(map, distances, state, targets, h, cfg.priorities, derive_seed(cfg.seed, 0x9e37));
  out.fallback = true;
  return out;
}

std::vector<Path> pibt_rollout(const GridMap& map, DistanceOracle& distances, std::span<const VertexId> state,
                               std::span<const std::vector<VertexId>> targets, int h,
                               std::span<const double> priorities, std::uint64_t seed) {
  if (h < 1) throw ArgumentError("horizon must be at least 1");
  const std::size_t n = state.size();
  if (targets.size() != n) throw ArgumentError("one target list per robot required");
  if (!priorities.empty() && priorities.size() != n) throw ArgumentError("one priority per robot required");
  constexpr int kNone = -1;

  Rng rng(seed);
  std::vector<double> prio(n);
  for (std::size_t i = 0; i < n; ++i) prio[i] = (priorities.empty() ? 0.0 : priorities[i]) + rng.uniform01();
  std::vector<std::size_t> next_target(n, 0);
  auto goal_of = [&](std::size_t i) {
    const auto& t = targets[i];
    if (t.empty()) return state[i];
    return t[std::min(next_target[i], t.size() - 1)];
  };

  std::vector<Path> paths(n);
  std::vector<VertexId> now(state.begin(), state.end());
  for (std::size_t i = 0; i < n; ++i) paths[i].vertices.push_back(now[i]);
  std::vector<int> occupied_now(static_cast<std::size_t>(map.cell_count()), kNone);
  std::vector<int> occupied_next(static_cast<std::size_t>(map.cell_count()), kNone);
  std::vector<VertexId> next(n);

  for (int step = 1; step <= h; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      while (next_target[i] < targets[i].size() && targets[i][next_target[i]] == now[i]) ++next_target[i];
      occupied_now[static_cast<std::size_t>(now[i].index)] = static_cast<int>(i);
      next[i] = VertexId{};
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return prio[a] > prio[b]; });

    auto pibt = [&](auto&& self, std::size_t i) -> bool {
      const auto field = distances.field(goal_of(i));
      std::array<VertexId, 5> cand{};
      int count = 0;
      for (VertexId u : map.neighbors(now[i])) cand[static_cast<std::size_t>(count++)] = u;
      cand[static_cast<std::size_t>(count++)] = now[i];
      rng.shuffle(std::span<VertexId>(cand.data(), static_cast<std::size_t>(count)));
      std::stable_sort(cand.begin(), cand.begin() + count,
                       [&](VertexId a, VertexId b) { return field->at(a) < field->at(b); });
      for (int c = 0; c < count; ++c) {
        const VertexId v = cand[static_cast<std::size_t>(c)];
        if (occupied_next[static_cast<std::size_t>(v.index)] != kNone) continue;
        const int j = occupied_now[static_cast<std::size_t>(v.index)];
        if (j != kNone && next[static_cast<std::size_t>(j)] == now[i]) continue;  // swap
        next[i] = v;
        occupied_next[static_cast<std::size_t>(v.index)] = static_cast<int>(i);
        if (j != kNone && static_cast<std::size_t>(j) != i && !next[static_cast<std::size_t>(j)].valid() &&
            !self(self, static_cast<std::size_t>(j))) {
          continue;
        }
        return true;
      }
      next[i] = now[i];
      occupied_next[static_cast<std::size_t>(now[i].index)] = static_cast<int>(i);
      return false;
    };
    for (std::size_t i : order) {
      if (!next[i].valid()) pibt(pibt, i);
    }

    for (std::size_t i = 0; i < n; ++i) {
      occupied_now[static_cast<std::size_t>(now[i].index)] = kNone;
      occupied_next[static_cast<std::size_t>(next[i].index)] = kNone;
    }
    for (std::size_t i = 0; i < n; ++i) {
      now[i] = next[i];
      paths[i].vertices.push_back(now[i]);
    }
  }
  return paths;
}

HorizonConfig lifelong_variant(const std::string& name, int h) {
  HorizonConfig cfg;
  cfg.h = h;
  cfg.suo.beta_v = 0.5;
  cfg.suo.beta_e = 0.5;
  if (name == "baseline") return cfg;
  cfg.use_horizon_cut = true;
  if (name == "cut") return cfg;
  cfg.use_suo_targets = true;
  if (name == "cut+suo") return cfg;
  if (name == "cut+suo+temporal") {
    cfg.suo.temporal = true;
    cfg.suo.alpha_l = 2;
    cfg.suo.alpha_h = 15;
    return cfg;
  }
  throw ArgumentError("unknown lifelong variant: " + name);
}

namespace {

struct CycleTargets {
  std::vector<std::vector<VertexId>> targets;  // chain without the state
  std::int64_t initial_conflicts = 0;
};

// Truncation, optional cut and SU-I leg choice for every robot.
CycleTargets select_targets(const GridMap& map, DistanceOracle& distances, std::span<const VertexId> state,
                            const std::vector<std::vector<VertexId>>& goals, const HorizonConfig& cfg,
                            std::uint64_t cycle_seed) {
  const std::size_t n = state.size();
  CycleTargets out;
  out.targets.resize(n);
  SuoParams params = cfg.suo;
  params.n_robots = std::max<int>(1, static_cast<int>(n));
  UsageTable table(params);

  std::vector<Path> walks;
  walks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto trunc = truncate_goal_list(state[i], goals[i], cfg.h, distances);
    auto& chain = trunc.chain;
    if (cfg.use_horizon_cut && chain.size() >= 2 && trunc.distance >= cfg.h) {
      const VertexId leg_start = chain[chain.size() - 2];
      const VertexId leg_end = chain.back();
      const auto cut = horizon_cut_target(map, leg_start, leg_end, trunc.distance, cfg.h, distances,
                                          cfg.use_suo_targets ? &table : nullptr, derive_seed(cycle_seed, i));
      chain.back() = cut.target;
      if (cfg.use_suo_targets) {
        const int L = cut.leg.length();
        table.add_path(cut.leg, trunc.distance - L);
      }
    }
    out.targets[i].assign(chain.begin() + 1, chain.end());
    walks.push_back(greedy_walk(map, distances, state[i], out.targets[i], cfg.h));
  }
  out.initial_conflicts = timed_conflicts(walks).total();
  return out;
}

}  // namespace

LifelongStats run_lifelong(const GridMap& map, std::span<const VertexId> starts, GoalStream& streams,
                           const HorizonConfig& cfg, std::int64_t stop_goals) {
  if (cfg.h < 1) throw ArgumentError("horizon must be at least 1");
  cfg.suo.validate();
  const std::size_t n = starts.size();
  if (streams.robots() != n) throw ArgumentError("goal stream robot count differs from the start count");
  for (VertexId s : starts) {
    if (!map.passable(s)) throw InstanceError("start is not a free vertex");
  }

  LifelongStats stats;
  if (n == 0) return stats;
  DistanceOracle distances(map);
  std::vector<VertexId> state(starts.begin(), starts.end());
  const int commit = cfg.commit_steps > 0 ? std::min(cfg.commit_steps, cfg.h) : cfg.h;
  const std::int64_t livelock_cycles = 20 * static_cast<std::int64_t>(cfg.h);

  std::vector<double> age(n, 0.0);  // steps since the last goal, for the fallback
  auto consume = [&](std::size_t i) {
    for (;;) {
      streams.ensure(i, 1);
      const auto& q = streams.goals(i);
      if (q.empty() || q.front() != state[i]) return;
      streams.pop(i);
      ++stats.goals_reached;
      age[i] = 0.0;
    }
  };
  for (std::size_t i = 0; i < n; ++i) consume(i);

  std::int64_t idle_cycles = 0;
  int cycle = 0;
  while (stats.goals_reached < stop_goals) {
    ++cycle;
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t cycle_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(cycle));

    // Queue enough goals to cover the horizon.
    std::vector<std::vector<VertexId>> goals(n);
    bool any_goal = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t d = 0;
      VertexId prev = state[i];
      for (std::size_t k = 0; d < cfg.h; ++k) {
        if (!streams.ensure(i, k + 1)) break;
        const VertexId g = streams.goals(i)[k];
        const auto hop = distances.distance(prev, g);
        if (hop == DistanceField::kUnreachable) throw InstanceError("goal unreachable from the robot's position");
        goals[i].push_back(g);
        d += hop;
        prev = g;
      }
      any_goal = any_goal || !goals[i].empty();
    }
    if (!any_goal) break;

    const auto targets = select_targets(map, distances, state, goals, cfg, cycle_seed);
    WindowedSolverConfig wcfg;
    wcfg.max_retries = cfg.max_retries;
    wcfg.seed = cycle_seed;
    wcfg.priorities = age;
    const auto plan = windowed_solver(map, distances, state, targets.targets, cfg.h, wcfg);
    const double ms = ms_since(t0);

    const std::int64_t before = stats.goals_reached;
    for (int s = 1; s <= commit && stats.goals_reached < stop_goals; ++s) {
      for (std::size_t i = 0; i < n; ++i) {
        state[i] = plan.paths[i].at(s);
        age[i] += 1.0;
        consume(i);
      }
      ++stats.elapsed_steps;
    }
    stats.expansions += plan.expanded;
    stats.solver_ms += ms;
    stats.fallback_cycles += plan.fallback ? 1 : 0;
    stats.cycles.push_back(
        CycleRecord{cycle, stats.goals_reached, ms, plan.expanded, targets.initial_conflicts, plan.fallback});

    idle_cycles = stats.goals_reached > before ? 0 : idle_cycles + 1;
    if (idle_cycles >= livelock_cycles) {
      throw SolverError("no goal reached for " + std::to_string(idle_cycles) + " cycles", -1);
    }
  }
  stats.throughput = throughput(stats.goals_reached, stats.elapsed_steps);
  return stats;
}

Solution solve_mpp_via_horizon(const MppInstance& instance, const HorizonConfig& cfg, int livelock_cycles) {
  instance.validate();
  if (cfg.h < 1) throw ArgumentError("horizon must be at least 1");
  const auto& map = instance.map;
  const std::size_t n = instance.tasks.size();
  DistanceOracle distances(map);

  Solution solution;
  auto& stats = solution.stats;
  std::vector<VertexId> state(n);
  std::vector<std::vector<VertexId>> goals(n);
  std::vector<Path> history(n);
  std::vector<double> age(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    state[i] = instance.tasks[i].start;
    goals[i] = {instance.tasks[i].goal};
    history[i].vertices.push_back(state[i]);
  }
  auto remaining = [&] {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += distances.distance(state[i], instance.tasks[i].goal);
    return sum;
  };

  const int commit = cfg.commit_steps > 0 ? std::min(cfg.commit_steps, cfg.h) : cfg.h;
  std::int64_t best = remaining();
  int stale = 0;
  const auto t0 = std::chrono::steady_clock::now();
  while (best > 0) {
    ++stats.cycles;
    const std::uint64_t cycle_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(stats.cycles));
    const auto targets = select_targets(map, distances, state, goals, cfg, cycle_seed);
    WindowedSolverConfig wcfg;
    wcfg.max_retries = cfg.max_retries;
    wcfg.seed = cycle_seed;
    wcfg.priorities = age;
    const auto plan = windowed_solver(map, distances, state, targets.targets, cfg.h, wcfg);
    stats.resolver.expanded += plan.expanded;
    for (int s = 1; s <= commit; ++s) {
      for (std::size_t i = 0; i < n; ++i) {
        state[i] = plan.paths[i].at(s);
        history[i].vertices.push_back(state[i]);
        age[i] = state[i] == instance.tasks[i].goal ? 0.0 : age[i] + 1.0;
      }
    }
    const auto now = remaining();
    if (now < best) {
      best = now;
      stale = 0;
    } else if (++stale >= livelock_cycles) {
      stats.phase2_ms = ms_since(t0);
      throw SolverError("livelock: summed distance to goal stalled for " + std::to_string(stale) + " cycles", -1,
                        stats);
    }
  }
  stats.phase2_ms = ms_since(t0);

  for (auto& p : history) {
    p.vertices.resize(static_cast<std::size_t>(p.length()) + 1);
  }
  solution.paths = std::move(history);
  finalize_solution(instance, solution);
  return solution;
}

}  // namespace suo
