#include "suo/movingai.hpp"

#include <fstream>
#include <sstream>

#include "suo/errors.hpp"

namespace suo {

namespace {

void strip_cr(std::string& line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
}

int parse_dimension(const std::string& line, const std::string& keyword, int line_no) {
  std::istringstream ss(line);
  std::string key;
  long value = 0;
  if (!(ss >> key >> value) || key != keyword) {
    throw ParseError("expected '" + keyword + " <n>', got '" + line + "'", line_no);
  }
  std::string rest;
  if (ss >> rest) throw ParseError("trailing text after " + keyword, line_no);
  if (value <= 0 || value > 1'000'000) throw ParseError(keyword + " must be positive", line_no);
  return static_cast<int>(value);
}

}  // namespace

GridMap parse_movingai_map(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    strip_cr(line);
    return true;
  };

  if (!next_line() || line.rfind("type", 0) != 0) throw ParseError("missing 'type' header", line_no);
  int width = 0;
  int height = 0;
  for (int i = 0; i < 2; ++i) {
    if (!next_line()) throw ParseError("truncated header", line_no);
    if (line.rfind("height", 0) == 0 && height == 0) {
      height = parse_dimension(line, "height", line_no);
    } else if (line.rfind("width", 0) == 0 && width == 0) {
      width = parse_dimension(line, "width", line_no);
    } else {
      throw ParseError("expected height/width header, got '" + line + "'", line_no);
    }
  }
  if (!next_line() || line != "map") throw ParseError("expected 'map'", line_no);

  std::vector<std::uint8_t> mask(static_cast<std::size_t>(width) * height, 0);
  for (int y = 0; y < height; ++y) {
    if (!next_line()) throw ParseError("expected " + std::to_string(height) + " rows", line_no);
    if (static_cast<int>(line.size()) != width) {
      throw ParseError("row has " + std::to_string(line.size()) + " cells, expected " + std::to_string(width),
                       line_no);
    }
    for (int x = 0; x < width; ++x) {
      switch (line[x]) {
        case '.':
        case 'G':
          break;
        case '@':
        case 'O':
        case 'T':
          mask[static_cast<std::size_t>(y) * width + x] = 1;
          break;
        default:
          throw ParseError(std::string("unknown cell character '") + line[x] + "'", line_no);
      }
    }
  }
  while (next_line()) {
    if (!line.empty()) throw ParseError("unexpected text after the last row", line_no);
  }
  return GridMap::from_mask(width, height, std::move(mask));
}

GridMap parse_movingai_map(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_movingai_map(in);
}

GridMap load_movingai_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open map file '" + path + "'", 0);
  return parse_movingai_map(in);
}

std::string serialize_movingai_map(const GridMap& map) {
  std::string out = "type octile\nheight " + std::to_string(map.height()) + "\nwidth " +
                    std::to_string(map.width()) + "\nmap\n";
  out.reserve(out.size() + static_cast<std::size_t>(map.cell_count() + map.height()));
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) out.push_back(map.passable(Cell{x, y}) ? '.' : '@');
    out.push_back('\n');
  }
  return out;
}

std::vector<ScenEntry> parse_movingai_scen(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<ScenEntry> out;
  if (!std::getline(in, line)) throw ParseError("empty scenario file", 0);
  ++line_no;
  strip_cr(line);
  if (line.rfind("version", 0) != 0) throw ParseError("missing 'version' header", line_no);
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    std::istringstream ss(line);
    ScenEntry e;
    if (!(ss >> e.bucket >> e.map_name >> e.map_width >> e.map_height >> e.start.x >> e.start.y >> e.goal.x >>
          e.goal.y >> e.optimal_length)) {
      throw ParseError("malformed scenario row", line_no);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ScenEntry> load_movingai_scen(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'", 0);
  return parse_movingai_scen(in);
}

}  // namespace suo
