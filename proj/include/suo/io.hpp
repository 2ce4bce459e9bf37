#pragma once

// JSON formats for instances and solutions. Cells are written as [x, y].

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "suo/generators.hpp"
#include "suo/graph.hpp"
#include "suo/mpp.hpp"
#include "suo/path.hpp"

namespace suo {

// {"map": <path or inline>, "robots": [{"start": [x,y], "goals": [[x,y], ...]}], "seed": s}
// "map" is either a movingai file path (relative to the instance file) or an
// object {"movingai": "<map text>"}.
struct InstanceFile {
  GridMap map;
  std::string map_path;  // empty when the map is inline
  std::vector<Task> robots;
  std::uint64_t seed = 0;
};

InstanceFile parse_instance(std::string_view json_text, const std::filesystem::path& base_dir = {});
InstanceFile load_instance(const std::string& path);
std::string instance_to_json(const InstanceFile& instance);
// Requires exactly one goal per robot.
MppInstance to_mpp_instance(const InstanceFile& instance);

// {"width", "height", "paths": [[[x,y], ...], ...], "makespan", "sum_of_cost", "stats": {...}}
// Timings are left out unless include_timing is set, keeping output reproducible.
std::string solution_to_json(const GridMap& map, const Solution& solution, bool include_timing);

struct SolutionFile {
  int width = 0;
  int height = 0;
  std::vector<Path> paths;
};
SolutionFile parse_solution(std::string_view json_text);

}  // namespace suo
