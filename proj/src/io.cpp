#include "suo/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "suo/errors.hpp"
#include "suo/movingai.hpp"

namespace suo {

namespace {

using nlohmann::json;

VertexId cell_from_json(const GridMap& map, const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw ParseError("expected a cell as [x, y]", 0);
  }
  const Cell c{j[0].get<int>(), j[1].get<int>()};
  if (!map.passable(c)) {
    throw InstanceError("cell [" + std::to_string(c.x) + ", " + std::to_string(c.y) + "] is not a free vertex");
  }
  return map.vertex(c);
}

json cell_to_json(const GridMap& map, VertexId v) {
  const Cell c = map.cell(v);
  return json::array({c.x, c.y});
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json search_stats_json(const SearchStats& s) {
  return json{{"expanded", s.expanded},
              {"generated", s.generated},
              {"h_evaluations", s.h_evaluations},
              {"h_bound_violations", s.h_bound_violations},
              {"priority_bound_violations", s.priority_bound_violations}};
}

}  // namespace

InstanceFile parse_instance(std::string_view json_text, const std::filesystem::path& base_dir) {
  const json j = parse_json(json_text);
  try {
    if (!j.is_object() || !j.contains("map") || !j.contains("robots")) {
      throw ParseError("instance needs \"map\" and \"robots\"", 0);
    }
    const json& m = j.at("map");
    std::string map_path;
    GridMap map = [&] {
      if (m.is_string()) {
        map_path = m.get<std::string>();
        const auto full = std::filesystem::path(map_path).is_absolute() ? std::filesystem::path(map_path)
                                                                         : base_dir / map_path;
        return load_movingai_map(full.string());
      }
      if (m.is_object() && m.contains("movingai")) return parse_movingai_map(m.at("movingai").get<std::string>());
      throw ParseError("\"map\" must be a path or {\"movingai\": text}", 0);
    }();

    InstanceFile out{std::move(map), std::move(map_path), {}, j.value("seed", std::uint64_t{0})};
    for (const auto& r : j.at("robots")) {
      Task t;
      t.start = cell_from_json(out.map, r.at("start"));
      if (r.contains("goals")) {
        for (const auto& g : r.at("goals")) t.goals.push_back(cell_from_json(out.map, g));
      } else if (r.contains("goal")) {
        t.goals.push_back(cell_from_json(out.map, r.at("goal")));
      }
      out.robots.push_back(std::move(t));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what(), 0);
  }
}

InstanceFile load_instance(const std::string& path) {
  return parse_instance(read_file(path), std::filesystem::path(path).parent_path());
}

std::string instance_to_json(const InstanceFile& instance) {
  json j;
  if (instance.map_path.empty()) {
    j["map"] = json{{"movingai", serialize_movingai_map(instance.map)}};
  } else {
    j["map"] = instance.map_path;
  }
  json robots = json::array();
  for (const auto& t : instance.robots) {
    json goals = json::array();
    for (VertexId g : t.goals) goals.push_back(cell_to_json(instance.map, g));
    robots.push_back(json{{"start", cell_to_json(instance.map, t.start)}, {"goals", goals}});
  }
  j["robots"] = robots;
  j["seed"] = instance.seed;
  return j.dump(2) + "\n";
}

MppInstance to_mpp_instance(const InstanceFile& instance) {
  MppInstance out{instance.map, {}};
  for (std::size_t i = 0; i < instance.robots.size(); ++i) {
    const auto& t = instance.robots[i];
    if (t.goals.size() != 1) {
      throw InstanceError("robot " + std::to_string(i) + ": one-shot planning needs exactly one goal");
    }
    out.tasks.push_back(StartGoal{t.start, t.goals.front()});
  }
  return out;
}

std::string solution_to_json(const GridMap& map, const Solution& solution, bool include_timing) {
  json paths = json::array();
  for (const auto& p : solution.paths) {
    json steps = json::array();
    for (VertexId v : p.vertices) steps.push_back(cell_to_json(map, v));
    paths.push_back(steps);
  }
  const auto& s = solution.stats;
  json stats{{"phase1_search", search_stats_json(s.phase1_search)},
             {"initial_c_single_global", s.initial_conflicts.c_single_global},
             {"initial_c_path_total", s.initial_conflicts.c_path_total},
             {"initial_vertex_conflicts", s.initial_conflicts.vertex_conflicts_timed},
             {"initial_edge_conflicts", s.initial_conflicts.edge_conflicts_timed},
             {"resolver_expanded", s.resolver.expanded},
             {"resolver_replanned", s.resolver.replanned},
             {"makespan_lower_bound", s.makespan_lower_bound},
             {"sum_of_cost_lower_bound", s.sum_of_cost_lower_bound},
             {"makespan_ratio", s.makespan_ratio},
             {"sum_of_cost_ratio", s.sum_of_cost_ratio},
             {"cycles", s.cycles}};
  if (include_timing) {
    stats["phase1_ms"] = s.phase1_ms;
    stats["phase2_ms"] = s.phase2_ms;
  }
  json j{{"width", map.width()},
         {"height", map.height()},
         {"paths", paths},
         {"makespan", solution.makespan},
         {"sum_of_cost", solution.sum_of_cost},
         {"stats", stats}};
  return j.dump(2) + "\n";
}

SolutionFile parse_solution(std::string_view json_text) {
  const json j = parse_json(json_text);
  try {
    SolutionFile out;
    out.width = j.at("width").get<int>();
    out.height = j.at("height").get<int>();
    if (out.width <= 0 || out.height <= 0) throw ParseError("solution dimensions must be positive", 0);
    for (const auto& p : j.at("paths")) {
      Path path;
      for (const auto& c : p) {
        if (!c.is_array() || c.size() != 2) throw ParseError("expected a cell as [x, y]", 0);
        const int x = c[0].get<int>();
        const int y = c[1].get<int>();
        if (x < 0 || y < 0 || x >= out.width || y >= out.height) {
          throw ParseError("cell [" + std::to_string(x) + ", " + std::to_string(y) + "] out of bounds", 0);
        }
        path.vertices.push_back(VertexId{y * out.width + x});
      }
      out.paths.push_back(std::move(path));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed solution: ") + e.what(), 0);
  }
}

}  // namespace suo
