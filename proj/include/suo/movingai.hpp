#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "suo/graph.hpp"

namespace suo {

// movingai .map grammar: "type <name>", "height H", "width W", "map", then H rows
// of W characters. '.' and 'G' are passable; '@', 'O', 'T' are blocked.
GridMap parse_movingai_map(std::istream& in);
GridMap parse_movingai_map(std::string_view text);
GridMap load_movingai_map(const std::string& path);
std::string serialize_movingai_map(const GridMap& map);

struct ScenEntry {
  int bucket = 0;
  std::string map_name;
  int map_width = 0;
  int map_height = 0;
  Cell start;
  Cell goal;
  double optimal_length = 0.0;
};

std::vector<ScenEntry> parse_movingai_scen(std::istream& in);
std::vector<ScenEntry> load_movingai_scen(const std::string& path);

}  // namespace suo
