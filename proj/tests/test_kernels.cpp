#include <gtest/gtest.h>

#include "suo/generators.hpp"
#include "suo/kernels.hpp"
#include "suo/metrics.hpp"
#include "suo/search.hpp"
#include "support.hpp"

namespace suo {
namespace {

std::vector<Path> random_plan(std::uint64_t seed, int n) {
  const auto map = generate_random_grid(20, 10, 0.05, seed);
  const auto inst = generate_instance(map, n, seed);
  std::vector<StartGoal> tasks;
  for (const auto& t : inst) tasks.push_back({t.start, t.goals.front()});
  SearchConfig cfg;
  cfg.tie_break_seed = seed;
  IndependentPlanOptions opt;
  opt.iterations = 0;
  return plan_independent_paths(map, tasks, cfg, opt).paths;
}

class KernelParity : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override { kernels::set_worker_count(GetParam()); }
  void TearDown() override { kernels::set_worker_count(1); }
};

TEST_P(KernelParity, FindConflicts) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto paths = random_plan(seed, 60);
    EXPECT_EQ(kernels::serial::find_conflicts(paths), kernels::parallel::find_conflicts(paths)) << "seed " << seed;
  }
}

TEST_P(KernelParity, PathOverlap) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto paths = random_plan(seed, 60);
    EXPECT_EQ(kernels::serial::path_overlap_total(paths), kernels::parallel::path_overlap_total(paths));
  }
}

TEST_P(KernelParity, DistanceFields) {
  const auto map = generate_warehouse({}, 3);
  const auto vs = map.vertices();
  std::vector<VertexId> goals;
  for (std::size_t i = 0; i < vs.size(); i += 17) goals.push_back(vs[i]);
  const auto a = kernels::serial::distance_fields(map, goals);
  const auto b = kernels::parallel::distance_fields(map, goals);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].goal(), b[i].goal());
    EXPECT_EQ(a[i].raw(), b[i].raw());
    EXPECT_EQ(a[i].raw(), distance_field(map, goals[i]).raw());
  }
}

INSTANTIATE_TEST_SUITE_P(Workers, KernelParity, ::testing::Values(1, 2, 4));

TEST(Kernels, EmptyInput) {
  const std::vector<Path> none;
  EXPECT_TRUE(kernels::parallel::find_conflicts(none).empty());
  EXPECT_EQ(kernels::parallel::path_overlap_total(none), 0);
}

TEST(Kernels, ConflictRecordFields) {
  const GridMap map(4, 1);
  const std::vector<Path> paths{test::row_path(map, 0, 0, 1), test::row_path(map, 0, 1, 0)};
  const auto c = kernels::parallel::find_conflicts(paths);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].type, ConflictType::swap);
  EXPECT_EQ(c[0].i, 0);
  EXPECT_EQ(c[0].j, 1);
  EXPECT_EQ(c[0].t, 1);
  EXPECT_EQ(c[0].a, map.vertex(0, 0));
  EXPECT_EQ(c[0].b, map.vertex(1, 0));
}

TEST(Kernels, WorkerCountOverride) {
  kernels::set_worker_count(3);
  EXPECT_EQ(kernels::worker_count(), 3);
  kernels::set_worker_count(1);
  EXPECT_EQ(kernels::worker_count(), 1);
}

}  // namespace
}  // namespace suo
