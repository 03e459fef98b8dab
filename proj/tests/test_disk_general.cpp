#include <gtest/gtest.h>

#include <cmath>

#include "mbs/mbs.hpp"
#include "support.hpp"

using mbs::GeometricInstance;
using mbs::Rational;

namespace {

GeometricInstance general(std::size_t n, std::uint64_t seed, std::int64_t den = 3) {
  mbs::GeneratorParams p{.kind = mbs::Kind::unit_disks, .n = n, .seed = seed, .resolution = 3};
  p.spread = Rational(static_cast<std::int64_t>(n) + 2, den);
  return mbs::generate(p);
}

GeometricInstance two_triangles() {
  return GeometricInstance::make_disks(
      {{{0, 0}}, {{1, 0}}, {{Rational(1, 2), 1}}, {{20, 20}}, {{21, 20}}, {{Rational(41, 2), 21}}});
}

}  // namespace

TEST(SlabAssignment, CentresSitWithinOneRadiusAboveTheirLine) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto inst = general(12, seed);
    auto s = mbs::build_slab_assignment(inst);
    ASSERT_EQ(s.group.size(), inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) {
      Rational y = inst.disks()[i].center.y;
      EXPECT_GE(s.group[i], 0);
      EXPECT_LE(s.line_y(s.group[i]), y);
      EXPECT_LT(y, s.line_y(s.group[i]) + inst.disk_radius);
    }
  }
}

TEST(SlabAssignment, GroupsThreeApartNeverTouch) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto inst = general(14, seed, 2);
    auto s = mbs::build_slab_assignment(inst);
    for (std::size_t i = 0; i < inst.size(); ++i)
      for (std::size_t j = 0; j < inst.size(); ++j)
        if (std::abs(s.group[i] - s.group[j]) >= 3) {
          EXPECT_FALSE(mbs::objects_intersect(inst, i, j));
        }
  }
}

TEST(SlabAssignment, GroupsTwoApartCanTouch) {
  auto inst = GeometricInstance::make_disks({{{0, 0}}, {{5, Rational(9, 10)}}, {{5, 2}}});
  auto s = mbs::build_slab_assignment(inst);
  EXPECT_EQ(s.group, (std::vector<std::int64_t>{0, 0, 2}));
  EXPECT_TRUE(mbs::objects_intersect(inst, 1, 2));
}

TEST(ThreeApprox, SingleGroupEqualsOneSided) {
  auto inst = GeometricInstance::make_disks(
      {{{0, 1}}, {{1, Rational(3, 2)}}, {{2, 1}}, {{3, Rational(7, 4)}}, {{Rational(7, 2), 1}}});
  EXPECT_EQ(mbs::solve_3approx(inst), mbs::solve_one_sided(inst, 1));
}

TEST(ThreeApprox, NamedScenes) {
  EXPECT_EQ(mbs::solve_3approx(two_triangles()).size(), 4u);
  auto spread = GeometricInstance::make_disks({{{0, 0}}, {{5, 1}}, {{10, 7}}, {{0, 12}}});
  EXPECT_EQ(mbs::solve_3approx(spread).size(), 4u);
}

TEST(ThreeApprox, PerLineSolutionsAreExact) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto inst = general(12, seed);
    auto res = mbs::solve_3approx_detailed(inst);
    for (const auto& [t, sol] : res.per_line) {
      std::vector<std::size_t> ids;
      for (std::size_t i = 0; i < inst.size(); ++i)
        if (res.slabs.group[i] == t) ids.push_back(i);
      auto g = mbs::build_intersection_graph(mbs::subinstance(inst, ids));
      EXPECT_EQ(sol.size(), mbs::exact_mbs(g).size());
    }
  }
}

TEST(ThreeApprox, ThirdOfOptimum) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto inst = general(1 + seed % 13, seed, 2 + static_cast<std::int64_t>(seed % 3));
    auto s = mbs::solve_3approx(inst);
    auto g = mbs::build_intersection_graph(inst);
    ASSERT_TRUE(s.coloring);
    EXPECT_FALSE(mbs::monochromatic_edge(g, s.selected, *s.coloring));
    EXPECT_GE(3 * s.size(), mbs::exact_mbs(g).size()) << seed;
  }
}

TEST(LogN, Factor) {
  EXPECT_EQ(mbs::logn_factor(1), 1.0);
  EXPECT_EQ(mbs::logn_factor(2), 2.0);
  EXPECT_EQ(mbs::logn_factor(8), 6.0);
  EXPECT_DOUBLE_EQ(mbs::logn_factor(14), 2 * std::log2(14.0));
}

TEST(LogN, NamedScenes) {
  auto one = GeometricInstance::make_disks({{{3, 4}}});
  EXPECT_EQ(mbs::solve_logn(one).selected, (std::vector<std::size_t>{0}));
  std::vector<mbs::DiskObj> far;
  for (int i = 0; i < 9; ++i) far.push_back({{5 * i, (i * 7) % 3}});
  EXPECT_EQ(mbs::solve_logn(GeometricInstance::make_disks(far)).size(), 9u);
  EXPECT_EQ(mbs::solve_logn(two_triangles()).size(), 4u);
  EXPECT_THROW(mbs::solve_logn(GeometricInstance::make_disks({})), mbs::ValidationError);
}

TEST(LogN, WithinFactorOfOptimum) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    std::size_t n = 1 + seed % 13;
    auto inst = general(n, seed, 2 + static_cast<std::int64_t>(seed % 3));
    auto s = mbs::solve_logn(inst);
    auto g = mbs::build_intersection_graph(inst);
    ASSERT_TRUE(s.coloring);
    EXPECT_FALSE(mbs::monochromatic_edge(g, s.selected, *s.coloring));
    auto opt = mbs::exact_mbs(g).size();
    EXPECT_GE(static_cast<double>(s.size()), std::ceil(static_cast<double>(opt) / mbs::logn_factor(n)) - 1e-9);
  }
}

TEST(LogN, RecursionAloneDropsTheMedianDisks) {
  std::vector<mbs::DiskObj> far;
  for (int i = 0; i < 9; ++i) far.push_back({{5 * i, 0}});
  auto inst = GeometricInstance::make_disks(far);
  std::vector<std::size_t> ids{0, 1, 2, 3, 4, 5, 6, 7, 8};
  auto rec = mbs::disk_detail::logn_rec(mbs::disk_detail::centers_of(inst), 1, ids);
  EXPECT_EQ(rec.size(), 6u);
  EXPECT_EQ(mbs::extend_bipartite(mbs::build_intersection_graph(inst), rec).size(), 9u);
}

TEST(LogN, TranslationInvariantSize) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto inst = general(12, seed);
    auto moved = mbs::translate(inst, Rational(-17, 5), Rational(9, 4));
    EXPECT_EQ(mbs::solve_logn(inst), mbs::solve_logn(moved));
    EXPECT_EQ(mbs::solve_3approx(inst), mbs::solve_3approx(moved));
  }
}
