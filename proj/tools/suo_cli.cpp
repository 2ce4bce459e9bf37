// Benchmark harness: map/instance generation, one-shot and lifelong runs,
// seed-batch sweeps and solution validation. Exit codes: 0 ok, 1 usage,
// 2 parse error, 3 infeasible instance, 4 solver failure, 5 conflicts found.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "suo/errors.hpp"
#include "suo/generators.hpp"
#include "suo/io.hpp"
#include "suo/kernels.hpp"
#include "suo/lmpp.hpp"
#include "suo/metrics.hpp"
#include "suo/movingai.hpp"
#include "suo/mpp.hpp"
#include "suo/search.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kInfeasible = 3, kSolver = 4, kConflicts = 5 };

struct Common {
  std::string out;
  std::string manifest;
  bool no_timing = false;
  std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out,-o", c.out, "Output file (stdout when omitted)");
  cmd->add_option("--manifest", c.manifest, "Write the full run configuration as JSON");
  cmd->add_flag("--no-timing", c.no_timing, "Leave wall-clock columns out of the output");
  cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw suo::ArgumentError("cannot write " + path);
  f << text;
}

void write_manifest(const CLI::App* cmd, const Common& c) {
  if (c.manifest.empty()) return;
  nlohmann::json j;
  j["subcommand"] = cmd->get_name();
  nlohmann::json opts = nlohmann::json::object();
  for (const CLI::Option* o : cmd->get_options()) {
    const std::string name = o->get_name(false, true);
    if (name.empty() || name == "--help" || name == "-h" || name == "--manifest") continue;
    const auto& res = o->results();
    if (o->get_expected_max() == 0) {
      opts[name] = o->count() > 0;
    } else if (res.empty()) {
      opts[name] = o->get_default_str();
    } else if (res.size() == 1) {
      opts[name] = res.front();
    } else {
      opts[name] = res;
    }
  }
  j["options"] = opts;
  j["workers"] = suo::kernels::worker_count();
  emit(c.manifest, j.dump(2) + "\n");
}

std::string fmt(double x) {
  std::ostringstream ss;
  ss << std::setprecision(6) << x;
  return ss.str();
}

suo::SearchMode parse_mode(const std::string& m) {
  if (m == "cost-to-go") return suo::SearchMode::cost_to_go;
  if (m == "cost-to-come") return suo::SearchMode::cost_to_come;
  throw suo::ArgumentError("unknown mode " + m);
}

suo::OrderPolicy parse_order(const std::string& o) {
  if (o == "desc") return suo::OrderPolicy::descending;
  if (o == "asc") return suo::OrderPolicy::ascending;
  if (o == "random") return suo::OrderPolicy::random;
  throw suo::ArgumentError("unknown order " + o);
}

struct SuoFlags {
  std::string mode = "cost-to-go";
  double beta_v = 0.5;
  double beta_e = 0.5;
  int alpha_l = 0;
  int alpha_h = 0;
  bool temporal = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "cost-to-go or cost-to-come")
        ->check(CLI::IsMember({"cost-to-go", "cost-to-come"}))
        ->capture_default_str();
    cmd->add_option("--beta-v", beta_v, "Vertex weight")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    cmd->add_option("--beta-e", beta_e, "Edge weight")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    cmd->add_option("--alpha-l", alpha_l, "Backward window")->check(CLI::NonNegativeNumber)->capture_default_str();
    cmd->add_option("--alpha-h", alpha_h, "Forward window")->check(CLI::NonNegativeNumber)->capture_default_str();
    cmd->add_flag("--temporal", temporal, "Time-indexed usage table");
  }

  suo::SearchConfig search(std::uint64_t seed) const {
    suo::SearchConfig cfg;
    cfg.mode = parse_mode(mode);
    cfg.suo.beta_v = beta_v;
    cfg.suo.beta_e = beta_e;
    cfg.suo.alpha_l = alpha_l;
    cfg.suo.alpha_h = alpha_h;
    cfg.suo.temporal = temporal;
    cfg.tie_break_seed = seed;
    return cfg;
  }
};

// gen-map -------------------------------------------------------------------

struct GenMap {
  Common c;
  std::string kind = "random";
  int width = 30;
  int height = 20;
  double ratio = 0.1;
  int free_cells = 0;
  suo::WarehouseLayout layout;
};

int run_gen_map(const CLI::App* cmd, GenMap& a) {
  const auto map = [&] {
    if (a.kind == "random") return suo::generate_random_grid(a.width, a.height, a.ratio, a.c.seed);
    if (a.kind == "warehouse") {
      if (!cmd->get_option("--width")->empty()) a.layout.width = a.width;
      if (!cmd->get_option("--height")->empty()) a.layout.height = a.height;
      return suo::generate_warehouse(a.layout, a.c.seed);
    }
    const int cells = a.free_cells > 0 ? a.free_cells : a.width * a.height / 2;
    return suo::generate_cave(a.width, a.height, cells, a.c.seed);
  }();
  emit(a.c.out, suo::serialize_movingai_map(map));
  write_manifest(cmd, a.c);
  return kOk;
}

// gen-instance ----------------------------------------------------------------

struct GenInstance {
  Common c;
  std::string map;
  std::string scen;
  int n = 10;
  int goals_per_robot = 1;
};

int run_gen_instance(const CLI::App* cmd, GenInstance& a) {
  suo::InstanceFile inst{suo::load_movingai_map(a.map), a.map, {}, a.c.seed};
  if (!a.scen.empty()) {
    const auto entries = suo::load_movingai_scen(a.scen);
    if (static_cast<int>(entries.size()) < a.n) throw suo::InstanceError("scenario has fewer entries than robots");
    for (int i = 0; i < a.n; ++i) {
      const auto& e = entries[static_cast<std::size_t>(i)];
      if (!inst.map.passable(e.start) || !inst.map.passable(e.goal)) {
        throw suo::InstanceError("scenario entry " + std::to_string(i) + " uses a blocked cell");
      }
      inst.robots.push_back(suo::Task{inst.map.vertex(e.start), {inst.map.vertex(e.goal)}});
    }
  } else {
    inst.robots = suo::generate_instance(inst.map, a.n, a.c.seed, a.goals_per_robot);
  }
  emit(a.c.out, suo::instance_to_json(inst));
  write_manifest(cmd, a.c);
  return kOk;
}

// solve -----------------------------------------------------------------------

struct Solve {
  Common c;
  SuoFlags suo;
  std::string instance;
  int r = 4;
  std::string order = "desc";
  std::string resolver = "prioritized";
  std::string variant = "baseline";
  int h = 50;
  std::string solution_out;
};

int run_solve(const CLI::App* cmd, Solve& a) {
  const auto file = suo::load_instance(a.instance);
  const auto inst = suo::to_mpp_instance(file);
  suo::Solution sol;
  if (a.resolver == "horizon") {
    auto cfg = suo::lifelong_variant(a.variant, a.h);
    cfg.seed = a.c.seed;
    sol = suo::solve_mpp_via_horizon(inst, cfg);
  } else {
    suo::MppConfig cfg;
    cfg.search = a.suo.search(a.c.seed);
    cfg.iterations = a.r;
    cfg.order = parse_order(a.order);
    sol = suo::solve_mpp(inst, cfg);
  }
  if (!a.solution_out.empty()) emit(a.solution_out, suo::solution_to_json(inst.map, sol, !a.c.no_timing));

  const auto& s = sol.stats;
  std::ostringstream csv;
  csv << "instance,n,resolver,mode,r,seed,makespan,sum_of_cost,makespan_ratio,sum_of_cost_ratio,"
         "initial_vertex_conflicts,initial_edge_conflicts,initial_c_single_global,initial_c_path_total,"
         "replanned,cycles";
  if (!a.c.no_timing) csv << ",phase1_ms,phase2_ms";
  csv << "\n";
  csv << a.instance << ',' << inst.tasks.size() << ',' << a.resolver << ',' << a.suo.mode << ',' << a.r << ','
      << a.c.seed << ',' << sol.makespan << ',' << sol.sum_of_cost << ',' << fmt(s.makespan_ratio) << ','
      << fmt(s.sum_of_cost_ratio) << ',' << s.initial_conflicts.vertex_conflicts_timed << ','
      << s.initial_conflicts.edge_conflicts_timed << ',' << s.initial_conflicts.c_single_global << ','
      << s.initial_conflicts.c_path_total << ',' << s.resolver.replanned << ',' << s.cycles;
  if (!a.c.no_timing) csv << ',' << fmt(s.phase1_ms) << ',' << fmt(s.phase2_ms);
  csv << "\n";
  emit(a.c.out, csv.str());
  write_manifest(cmd, a.c);
  return kOk;
}

// lifelong ----------------------------------------------------------------------

struct Lifelong {
  Common c;
  std::string map;
  int n = 40;
  int h = 5;
  std::int64_t total_goals = 500;
  std::string variant = "baseline";
  std::string summary;
};

int run_lifelong(const CLI::App* cmd, Lifelong& a) {
  const auto map = a.map.empty() ? suo::generate_warehouse({}, a.c.seed) : suo::load_movingai_map(a.map);
  const auto tasks = suo::generate_instance(map, a.n, a.c.seed);
  std::vector<suo::VertexId> starts;
  for (const auto& t : tasks) starts.push_back(t.start);
  auto streams = suo::GoalStream::random(map, starts.size(), a.c.seed);
  auto cfg = suo::lifelong_variant(a.variant, a.h);
  cfg.seed = a.c.seed;
  const auto stats = suo::run_lifelong(map, starts, streams, cfg, a.total_goals);

  std::ostringstream csv;
  csv << "cycle,goals_reached_cumulative,expansions,conflicts_in_initial_targets,fallback";
  if (!a.c.no_timing) csv << ",solver_ms";
  csv << "\n";
  for (const auto& rec : stats.cycles) {
    csv << rec.cycle << ',' << rec.goals_reached_cumulative << ',' << rec.expansions << ','
        << rec.conflicts_in_initial_targets << ',' << (rec.fallback ? 1 : 0);
    if (!a.c.no_timing) csv << ',' << fmt(rec.solver_ms);
    csv << "\n";
  }
  emit(a.c.out, csv.str());

  std::ostringstream sum;
  sum << "variant,n,h,seed,goals_reached,elapsed_steps,throughput,expansions,fallback_cycles";
  if (!a.c.no_timing) sum << ",solver_ms";
  sum << "\n"
      << a.variant << ',' << a.n << ',' << a.h << ',' << a.c.seed << ',' << stats.goals_reached << ','
      << stats.elapsed_steps << ',' << fmt(stats.throughput) << ',' << stats.expansions << ','
      << stats.fallback_cycles;
  if (!a.c.no_timing) sum << ',' << fmt(stats.solver_ms);
  sum << "\n";
  if (!a.summary.empty()) {
    emit(a.summary, sum.str());
  } else if (!a.c.out.empty()) {
    std::cout << sum.str();
  }
  write_manifest(cmd, a.c);
  return kOk;
}

// bench-standalone ---------------------------------------------------------------

struct Bench {
  Common c;
  SuoFlags suo;
  int width = 20;
  int height = 10;
  double ratio = 0.05;
  int n = 100;
  int r_min = 0;
  int r_max = 8;
  std::string order = "desc";
  std::string metric = "max-vertex";
  int seeds = 30;
};

double metric_value(const std::string& metric, std::span<const suo::Path> paths) {
  if (metric == "max-vertex") return suo::c_single_global(paths);
  if (metric == "max-edge") return static_cast<double>(suo::max_edge_head_to_head(paths));
  if (metric == "c-path") return static_cast<double>(suo::c_path_total(paths));
  if (metric == "max-vertex-time") return suo::max_vertex_time(paths);
  if (metric == "max-edge-time") return static_cast<double>(suo::max_edge_head_to_head_time(paths));
  return static_cast<double>(suo::timed_conflicts(paths).total());
}

int run_bench(const CLI::App* cmd, Bench& a) {
  if (a.r_min < 0 || a.r_max < a.r_min) throw suo::ArgumentError("need 0 <= r-min <= r-max");
  if (a.seeds < 1) throw suo::ArgumentError("need at least one seed");
  const int rs = a.r_max - a.r_min + 1;
  // values[seed][r]; each seed is planned end-to-end by one worker.
  std::vector<std::vector<double>> values(static_cast<std::size_t>(a.seeds), std::vector<double>(rs, 0.0));
  std::vector<std::vector<double>> millis(values);
  std::vector<std::string> errors(static_cast<std::size_t>(a.seeds));
  const int workers = suo::kernels::worker_count();
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (int s = 0; s < a.seeds; ++s) {
    const auto su = static_cast<std::size_t>(s);
    try {
      const std::uint64_t seed = a.c.seed + static_cast<std::uint64_t>(s);
      const auto map = suo::generate_random_grid(a.width, a.height, a.ratio, seed);
      std::vector<suo::StartGoal> tasks;
      for (const auto& t : suo::generate_instance(map, a.n, seed)) tasks.push_back({t.start, t.goals.front()});
      for (int r = a.r_min; r <= a.r_max; ++r) {
        suo::IndependentPlanOptions opts;
        opts.iterations = r;
        opts.order = parse_order(a.order);
        opts.order_seed = seed;
        const auto t0 = omp_get_wtime();
        const auto plan = suo::plan_independent_paths(map, tasks, a.suo.search(seed), opts);
        millis[su][static_cast<std::size_t>(r - a.r_min)] = (omp_get_wtime() - t0) * 1000.0;
        values[su][static_cast<std::size_t>(r - a.r_min)] = metric_value(a.metric, plan.paths);
      }
    } catch (const std::exception& e) {
      errors[su] = e.what();
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw suo::InstanceError(e);
  }

  std::vector<double> mean(static_cast<std::size_t>(rs), 0.0);
  for (const auto& row : values) {
    for (int r = 0; r < rs; ++r) mean[static_cast<std::size_t>(r)] += row[static_cast<std::size_t>(r)] / a.seeds;
  }
  const auto normalized = suo::normalize_by_first(mean);

  std::ostringstream csv;
  csv << "seed,r,order,mode,metric,value,normalized";
  if (!a.c.no_timing) csv << ",ms";
  csv << "\n";
  for (int s = 0; s < a.seeds; ++s) {
    for (int r = 0; r < rs; ++r) {
      const auto& row = values[static_cast<std::size_t>(s)];
      const double first = row.front();
      csv << a.c.seed + static_cast<std::uint64_t>(s) << ',' << a.r_min + r << ',' << a.order << ',' << a.suo.mode
          << ',' << a.metric << ',' << fmt(row[static_cast<std::size_t>(r)]) << ','
          << fmt(first != 0.0 ? row[static_cast<std::size_t>(r)] / first : 0.0);
      if (!a.c.no_timing) csv << ',' << fmt(millis[static_cast<std::size_t>(s)][static_cast<std::size_t>(r)]);
      csv << "\n";
    }
  }
  for (int r = 0; r < rs; ++r) {
    csv << "mean," << a.r_min + r << ',' << a.order << ',' << a.suo.mode << ',' << a.metric << ','
        << fmt(mean[static_cast<std::size_t>(r)]) << ',' << fmt(normalized[static_cast<std::size_t>(r)]);
    if (!a.c.no_timing) csv << ',';
    csv << "\n";
  }
  emit(a.c.out, csv.str());
  write_manifest(cmd, a.c);
  return kOk;
}

// validate ----------------------------------------------------------------------

struct Validate {
  std::string solution;
  std::string map;
};

int run_validate(Validate& a) {
  std::ifstream in(a.solution);
  if (!in) throw suo::ParseError("cannot open " + a.solution, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto sol = suo::parse_solution(ss.str());

  int bad = 0;
  if (!a.map.empty()) {
    const auto map = suo::load_movingai_map(a.map);
    if (map.width() != sol.width || map.height() != sol.height) {
      throw suo::ParseError("solution dimensions differ from the map", 0);
    }
    for (std::size_t i = 0; i < sol.paths.size(); ++i) {
      if (!suo::is_feasible(map, sol.paths[i])) {
        std::cout << "infeasible,robot=" << i << "\n";
        ++bad;
      }
    }
  }
  const auto conflicts = suo::validate_solution(sol.paths);
  for (const auto& c : conflicts) {
    const auto cell = [&](suo::VertexId v) {
      return "(" + std::to_string(v.index % sol.width) + " " + std::to_string(v.index / sol.width) + ")";
    };
    std::cout << (c.type == suo::ConflictType::vertex ? "vertex" : "swap") << ",i=" << c.i << ",j=" << c.j
              << ",t=" << c.t << ',' << cell(c.a);
    if (c.type == suo::ConflictType::swap) std::cout << ',' << cell(c.b);
    std::cout << "\n";
  }
  if (conflicts.empty() && bad == 0) {
    std::cout << "ok: " << sol.paths.size() << " paths, no conflicts\n";
    return kOk;
  }
  std::cout << "conflicts: " << conflicts.size() << ", infeasible paths: " << bad << "\n";
  return kConflicts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space-utilization path planning for many robots on grids"};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "Worker threads (default: SUO_WORKERS or all cores)");

  GenMap gm;
  auto* gen_map = app.add_subcommand("gen-map", "Generate a grid map in movingai format");
  add_common(gen_map, gm.c);
  gen_map->add_option("--kind", gm.kind, "random, warehouse or cave")
      ->check(CLI::IsMember({"random", "warehouse", "cave"}))
      ->capture_default_str();
  gen_map->add_option("--width", gm.width, "Map width")->capture_default_str();
  gen_map->add_option("--height", gm.height, "Map height")->capture_default_str();
  gen_map->add_option("--ratio", gm.ratio, "Obstacle ratio (random)")->capture_default_str();
  gen_map->add_option("--free-cells", gm.free_cells, "Free cell count (cave)");
  gen_map->add_option("--shelf-width", gm.layout.shelf_width, "Shelf width (warehouse)")->capture_default_str();
  gen_map->add_option("--shelf-height", gm.layout.shelf_height, "Shelf height (warehouse)")->capture_default_str();
  gen_map->add_option("--aisle", gm.layout.aisle, "Aisle width (warehouse)")->capture_default_str();

  GenInstance gi;
  auto* gen_inst = app.add_subcommand("gen-instance", "Sample starts and goals on a map");
  add_common(gen_inst, gi.c);
  gen_inst->add_option("--map", gi.map, "movingai map file")->required();
  gen_inst->add_option("--scen", gi.scen, "Take starts and goals from a movingai scenario");
  gen_inst->add_option("--n", gi.n, "Robot count")->capture_default_str();
  gen_inst->add_option("--goals-per-robot", gi.goals_per_robot, "Goals per robot")->capture_default_str();

  Solve so;
  auto* solve = app.add_subcommand("solve", "Solve a one-shot instance");
  add_common(solve, so.c);
  so.suo.add(solve);
  solve->add_option("--instance", so.instance, "Instance JSON")->required();
  solve->add_option("--r", so.r, "SU-I iterations (0: plain A*)")->check(CLI::NonNegativeNumber)->capture_default_str();
  solve->add_option("--order", so.order, "desc, asc or random")
      ->check(CLI::IsMember({"desc", "asc", "random"}))
      ->capture_default_str();
  solve->add_option("--resolver", so.resolver, "prioritized or horizon")
      ->check(CLI::IsMember({"prioritized", "horizon"}))
      ->capture_default_str();
  solve->add_option("--variant", so.variant, "Horizon variant")
      ->check(CLI::IsMember({"baseline", "cut", "cut+suo", "cut+suo+temporal"}))
      ->capture_default_str();
  solve->add_option("--horizon", so.h, "Planning horizon (horizon resolver)")->check(CLI::PositiveNumber)->capture_default_str();
  solve->add_option("--solution", so.solution_out, "Write the solution JSON here");

  Lifelong ll;
  auto* lifelong = app.add_subcommand("lifelong", "Lifelong planning with streamed goals");
  add_common(lifelong, ll.c);
  lifelong->add_option("--map", ll.map, "movingai map file (default: generated 37x20 warehouse)");
  lifelong->add_option("--n", ll.n, "Robot count")->capture_default_str();
  lifelong->add_option("--horizon", ll.h, "Planning horizon")->check(CLI::PositiveNumber)->capture_default_str();
  lifelong->add_option("--total-goals", ll.total_goals, "Stop after this many goals")->capture_default_str();
  lifelong->add_option("--variant", ll.variant, "baseline, cut, cut+suo, cut+suo+temporal")
      ->check(CLI::IsMember({"baseline", "cut", "cut+suo", "cut+suo+temporal"}))
      ->capture_default_str();
  lifelong->add_option("--summary", ll.summary, "Write the one-row summary CSV here");

  Bench be;
  auto* bench = app.add_subcommand("bench-standalone", "Initial-path conflict metrics over r and seeds");
  add_common(bench, be.c);
  be.suo.add(bench);
  bench->add_option("--width", be.width, "Map width")->capture_default_str();
  bench->add_option("--height", be.height, "Map height")->capture_default_str();
  bench->add_option("--ratio", be.ratio, "Obstacle ratio")->capture_default_str();
  bench->add_option("--n", be.n, "Robot count")->capture_default_str();
  bench->add_option("--r-min", be.r_min, "First iteration count")->capture_default_str();
  bench->add_option("--r-max", be.r_max, "Last iteration count")->capture_default_str();
  bench->add_option("--order", be.order, "desc, asc or random")
      ->check(CLI::IsMember({"desc", "asc", "random"}))
      ->capture_default_str();
  bench->add_option("--metric", be.metric, "max-vertex, max-edge, max-vertex-time, max-edge-time, c-path or conflicts")
      ->check(CLI::IsMember({"max-vertex", "max-edge", "max-vertex-time", "max-edge-time", "c-path", "conflicts"}))
      ->capture_default_str();
  bench->add_option("--seeds", be.seeds, "Seed batch size")->capture_default_str();

  Validate va;
  auto* validate = app.add_subcommand("validate", "Check a solution file for conflicts");
  validate->add_option("--solution,solution", va.solution, "Solution JSON")->required();
  validate->add_option("--map", va.map, "Also check path feasibility against this map");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (workers > 0) suo::kernels::set_worker_count(workers);

  try {
    if (*gen_map) return run_gen_map(gen_map, gm);
    if (*gen_inst) return run_gen_instance(gen_inst, gi);
    if (*solve) return run_solve(solve, so);
    if (*lifelong) return run_lifelong(lifelong, ll);
    if (*bench) return run_bench(bench, be);
    if (*validate) return run_validate(va);
  } catch (const suo::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const suo::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kSolver;
  } catch (const suo::InstanceError& e) {
    std::cerr << "infeasible instance: " << e.what() << "\n";
    return kInfeasible;
  } catch (const suo::NoPathError& e) {
    std::cerr << "infeasible instance: " << e.what() << "\n";
    return kInfeasible;
  } catch (const suo::GenerationError& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kInfeasible;
  } catch (const suo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
