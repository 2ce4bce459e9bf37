#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "suo/errors.hpp"
#include "suo/io.hpp"
#include "suo/movingai.hpp"
#include "support.hpp"

namespace suo {
namespace {

constexpr const char* kInline = R"({
  "map": {"movingai": "type octile\nheight 2\nwidth 3\nmap\n...\n.@.\n"},
  "seed": 9,
  "robots": [
    {"start": [0, 0], "goals": [[2, 1], [0, 1]]},
    {"start": [2, 0], "goal": [0, 1]}
  ]
})";

TEST(InstanceJson, ParsesInlineMap) {
  const auto inst = parse_instance(kInline);
  EXPECT_EQ(inst.map.vertex_count(), 5);
  EXPECT_EQ(inst.seed, 9u);
  ASSERT_EQ(inst.robots.size(), 2u);
  EXPECT_EQ(inst.robots[0].goals.size(), 2u);
  EXPECT_EQ(inst.robots[1].goals.at(0), inst.map.vertex(0, 1));
}

TEST(InstanceJson, RoundTrip) {
  const auto inst = parse_instance(kInline);
  const auto again = parse_instance(instance_to_json(inst));
  EXPECT_EQ(again.map, inst.map);
  ASSERT_EQ(again.robots.size(), inst.robots.size());
  for (std::size_t i = 0; i < inst.robots.size(); ++i) {
    EXPECT_EQ(again.robots[i].start, inst.robots[i].start);
    EXPECT_EQ(again.robots[i].goals, inst.robots[i].goals);
  }
}

TEST(InstanceJson, MapPathRelativeToInstance) {
  const auto dir = std::filesystem::temp_directory_path() / "suo_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "m.map") << serialize_movingai_map(GridMap(3, 2, {{1, 1}}));
    std::ofstream(dir / "i.json") << R"({"map": "m.map", "robots": [{"start": [0,0], "goal": [2,1]}]})";
  }
  const auto inst = load_instance((dir / "i.json").string());
  EXPECT_EQ(inst.map_path, "m.map");
  EXPECT_EQ(inst.map.vertex_count(), 5);
  const auto mpp = to_mpp_instance(inst);
  ASSERT_EQ(mpp.tasks.size(), 1u);
  EXPECT_EQ(mpp.tasks[0].goal, inst.map.vertex(2, 1));
  std::filesystem::remove_all(dir);
}

TEST(InstanceJson, Errors) {
  EXPECT_THROW(parse_instance("{"), ParseError);
  EXPECT_THROW(parse_instance(R"({"robots": []})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"map": 3, "robots": []})"), ParseError);
  // [1, 1] is blocked in the inline map.
  EXPECT_THROW(parse_instance(R"({"map": {"movingai": "type octile\nheight 2\nwidth 3\nmap\n...\n.@.\n"},
                                 "robots": [{"start": [1, 1], "goal": [0, 0]}]})"),
               InstanceError);
  EXPECT_THROW(parse_instance(R"({"map": {"movingai": "type octile\nheight 2\nwidth 3\nmap\n...\n.@.\n"},
                                 "robots": [{"start": [0], "goal": [0, 0]}]})"),
               ParseError);
  EXPECT_THROW(to_mpp_instance(parse_instance(kInline)), InstanceError);
}

TEST(SolutionJson, RoundTripsPaths) {
  const GridMap map(3, 3);
  Solution sol;
  sol.paths = {test::row_path(map, 0, 0, 2), test::col_path(map, 1, 2, 0)};
  sol.makespan = 2;
  sol.sum_of_cost = 4;
  const auto text = solution_to_json(map, sol, false);
  EXPECT_EQ(text.find("phase1_ms"), std::string::npos);
  EXPECT_NE(solution_to_json(map, sol, true).find("phase1_ms"), std::string::npos);
  const auto parsed = parse_solution(text);
  EXPECT_EQ(parsed.width, 3);
  EXPECT_EQ(parsed.height, 3);
  EXPECT_EQ(parsed.paths, sol.paths);
}

TEST(SolutionJson, RejectsOutOfBoundsCells) {
  EXPECT_THROW(parse_solution(R"({"width": 2, "height": 2, "paths": [[[0,0],[2,0]]]})"), ParseError);
  EXPECT_THROW(parse_solution(R"({"width": 2, "paths": []})"), ParseError);
}

}  // namespace
}  // namespace suo
