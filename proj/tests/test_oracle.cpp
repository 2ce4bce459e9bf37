#include <gtest/gtest.h>

#include "suo/errors.hpp"
#include "suo/oracle.hpp"
#include "support.hpp"

namespace suo {
namespace {

using oracle::Objective;

TEST(Enumerate, EmptyGrids) {
  const GridMap two(2, 2);
  EXPECT_EQ(oracle::enumerate_shortest_paths(two, two.vertex(0, 0), two.vertex(1, 1)).paths.size(), 2u);
  const GridMap three(3, 3);
  const auto e = oracle::enumerate_shortest_paths(three, three.vertex(0, 0), three.vertex(2, 2));
  EXPECT_EQ(e.paths.size(), 6u);
  EXPECT_EQ(e.length, 4);
}

TEST(Enumerate, Corridor) {
  const GridMap map(6, 1);
  const auto e = oracle::enumerate_shortest_paths(map, map.vertex(0, 0), map.vertex(5, 0));
  ASSERT_EQ(e.paths.size(), 1u);
  EXPECT_EQ(e.paths[0], test::row_path(map, 0, 0, 5));
}

TEST(Enumerate, StartEqualsGoal) {
  const GridMap map(2, 2);
  const auto e = oracle::enumerate_shortest_paths(map, map.vertex(1, 0), map.vertex(1, 0));
  ASSERT_EQ(e.paths.size(), 1u);
  EXPECT_EQ(e.length, 0);
}

TEST(Enumerate, EveryPathIsShortestAndDistinct) {
  const GridMap map(4, 4, {{1, 1}, {2, 2}});
  const auto s = map.vertex(0, 0), g = map.vertex(3, 3);
  const auto e = oracle::enumerate_shortest_paths(map, s, g);
  const int d = distance_field(map, g).at(s);
  for (const auto& p : e.paths) {
    EXPECT_EQ(p.length(), d);
    EXPECT_TRUE(is_feasible(map, p));
  }
  auto sorted = e.paths;
  std::sort(sorted.begin(), sorted.end(), [](const Path& a, const Path& b) { return a.vertices < b.vertices; });
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
}

// Binomial counts on empty grids: C(w-1 + h-1, w-1).
TEST(Enumerate, BinomialCounts) {
  const GridMap map(5, 5);
  EXPECT_EQ(oracle::enumerate_shortest_paths(map, map.vertex(0, 0), map.vertex(4, 4)).paths.size(), 70u);
  EXPECT_EQ(oracle::enumerate_shortest_paths(map, map.vertex(0, 0), map.vertex(4, 2)).paths.size(), 15u);
}

TEST(Enumerate, CapAndUnreachable) {
  const GridMap map(5, 5);
  EXPECT_THROW(oracle::enumerate_shortest_paths(map, map.vertex(0, 0), map.vertex(4, 4), 69), OracleTooLargeError);
  const GridMap split(3, 1, {{1, 0}});
  EXPECT_THROW(oracle::enumerate_shortest_paths(split, split.vertex(0, 0), split.vertex(2, 0)), NoPathError);
}

TEST(BruteMin, EmptyTable) {
  const GridMap map(3, 3);
  const auto e = oracle::enumerate_shortest_paths(map, map.vertex(0, 0), map.vertex(2, 2));
  EXPECT_EQ(oracle::brute_min_objective(e, map, UsageTable{}, Objective::max_single).value, 0);
  EXPECT_EQ(oracle::brute_min_objective(e, map, UsageTable{}, Objective::sum_path).value, 0);
}

// Anti-diagonal (2,0), (1,1), (0,2) loaded once each. Every corner-to-corner
// path crosses the anti-diagonal at its step-2 vertex, which is interior.
TEST(BruteMin, LoadedDiagonal) {
  const GridMap map(3, 3);
  std::vector<std::int32_t> counts(9, 0);
  counts[map.vertex(2, 0).index] = 1;
  counts[map.vertex(1, 1).index] = 1;
  counts[map.vertex(0, 2).index] = 1;
  const auto e = oracle::enumerate_shortest_paths(map, map.vertex(0, 0), map.vertex(2, 2));
  EXPECT_EQ(oracle::brute_min_objective(e, counts, Objective::max_single).value, 1);
  EXPECT_EQ(oracle::brute_min_objective(e, counts, Objective::sum_path).value, 1);
  // Main diagonal instead: paths along the border avoid (1,1).
  std::vector<std::int32_t> main(9, 0);
  main[map.vertex(0, 0).index] = 1;
  main[map.vertex(1, 1).index] = 1;
  main[map.vertex(2, 2).index] = 1;
  const auto best = oracle::brute_min_objective(e, main, Objective::max_single);
  EXPECT_EQ(best.value, 0);
  EXPECT_EQ(oracle::objective_value(best.witness, main, Objective::sum_path), 2);
}

TEST(BruteMin, SinglePathEnumeration) {
  const GridMap map(4, 1);
  std::vector<std::int32_t> counts{0, 2, 5, 1};
  const auto e = oracle::enumerate_shortest_paths(map, map.vertex(0, 0), map.vertex(3, 0));
  EXPECT_EQ(oracle::brute_min_objective(e, counts, Objective::max_single).value, 5);
  EXPECT_EQ(oracle::brute_min_objective(e, counts, Objective::sum_path).value, 8);
}

TEST(ImageCounts, WaitsCountOnce) {
  const GridMap map(3, 1);
  const std::vector<Path> paths{test::make_path(map, {{0, 0}, {0, 0}, {1, 0}}), test::row_path(map, 0, 0, 2)};
  const auto c = oracle::image_counts(map, paths);
  EXPECT_EQ(c, (std::vector<std::int32_t>{2, 2, 1}));
}

}  // namespace
}  // namespace suo
