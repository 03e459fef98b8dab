#include <gtest/gtest.h>

#include "mbs/mbs.hpp"
#include "support.hpp"

using mbs::GeometricInstance;
using mbs::Kind;

TEST(Doubling, SingleObjectBecomesAnEdge) {
  auto d = mbs::double_instance(GeometricInstance::make_disks({{{3, 4}}}));
  ASSERT_EQ(d.size(), 2u);
  auto g = mbs::build_intersection_graph(d);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(Doubling, EdgelessSceneBecomesAMatching) {
  auto d = mbs::double_instance(GeometricInstance::make_intervals({{0, 1}, {2, 3}, {4, 5}}));
  auto g = mbs::build_intersection_graph(d);
  EXPECT_EQ(g.edge_count(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(g.adjacent(i, i + 3));
}

TEST(Doubling, DegreeAndAdjacency) {
  const Kind kinds[] = {Kind::intervals, Kind::arcs, Kind::unit_disks, Kind::unit_squares, Kind::unit_height_rects,
                        Kind::rects};
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto inst = mbs::generate({.kind = kinds[seed % 6], .n = 7, .seed = seed});
    auto g = mbs::build_intersection_graph(inst);
    auto d = mbs::double_instance(inst);
    auto h = mbs::build_intersection_graph(d);
    const std::size_t n = inst.size();
    ASSERT_EQ(h.size(), 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(h.degree(i), 2 * g.degree(i) + 1);
      EXPECT_EQ(h.degree(i + n), 2 * g.degree(i) + 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (std::size_t a : {i, i + n})
          for (std::size_t b : {j, j + n}) EXPECT_EQ(h.adjacent(a, b), g.adjacent(i, j));
      }
    }
  }
}

TEST(Doubling, BipartiteOptimumIsTwiceIndependentOptimum) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto inst = mbs::generate({.kind = Kind::unit_disks, .n = 1 + seed % 8, .seed = seed, .resolution = 3});
    auto mis = mbs_test::naive_optima(mbs_test::naive_adjacency(inst)).mis;
    auto d = mbs::double_instance(inst);
    EXPECT_EQ(mbs::exact_mbs(mbs::build_intersection_graph(d)).size(), 2 * mis) << seed;
  }
}
