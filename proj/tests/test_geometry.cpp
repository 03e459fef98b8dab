#include <gtest/gtest.h>

#include "mbs/mbs.hpp"
#include "support.hpp"

using mbs::GeometricInstance;
using mbs::Kind;
using mbs::Rational;

TEST(Geometry, OverlappingIntervalsIntersect) {
  EXPECT_TRUE(mbs::intersects(mbs::IntervalObj{0, 2}, mbs::IntervalObj{1, 3}));
  EXPECT_TRUE(mbs::intersects(mbs::IntervalObj{0, 1}, mbs::IntervalObj{1, 2}));
  EXPECT_FALSE(mbs::intersects(mbs::IntervalObj{0, 1}, mbs::IntervalObj{Rational(3, 2), 2}));
}

TEST(Geometry, TangentDisksIntersect) {
  EXPECT_TRUE(mbs::disks_intersect({0, 0}, {2, 0}, 1));
  EXPECT_FALSE(mbs::disks_intersect({0, 0}, {Rational(2000001, 1000000), 0}, 1));
  // distance 10/5 = 2 along a 3-4-5 diagonal
  EXPECT_TRUE(mbs::disks_intersect({0, 0}, {Rational(6, 5), Rational(8, 5)}, 1));
  EXPECT_TRUE(mbs::disks_intersect({0, 0}, {6, 8}, 5));
  EXPECT_FALSE(mbs::disks_intersect({0, 0}, {6, 8}, Rational(49, 10)));
}

TEST(Geometry, FarDisksGiveEdgelessGraph) {
  auto inst = GeometricInstance::make_disks({{{0, 0}}, {{5, 0}}, {{10, 0}}});
  EXPECT_EQ(mbs::build_intersection_graph(inst).edge_count(), 0u);
}

TEST(Geometry, RectanglesSharingAnEdgeIntersect) {
  EXPECT_TRUE(mbs::intersects(mbs::RectObj{0, 1, 0, 1}, mbs::RectObj{1, 2, 0, 1}));
  EXPECT_TRUE(mbs::intersects(mbs::RectObj{0, 1, 0, 1}, mbs::RectObj{1, 2, 1, 2}));
  EXPECT_FALSE(mbs::intersects(mbs::RectObj{0, 1, 0, 1}, mbs::RectObj{0, 1, Rational(3, 2), Rational(5, 2)}));
}

TEST(Geometry, ArcsWrapAroundZero) {
  mbs::ArcObj wrap{Rational(9, 10), Rational(1, 10)};
  EXPECT_TRUE(mbs::arc_contains(wrap, 0));
  EXPECT_TRUE(mbs::arc_contains(wrap, Rational(95, 100)));
  EXPECT_FALSE(mbs::arc_contains(wrap, Rational(1, 2)));
  EXPECT_TRUE(mbs::intersects(wrap, mbs::ArcObj{Rational(1, 20), Rational(1, 5)}));
  EXPECT_TRUE(mbs::intersects(wrap, mbs::ArcObj{Rational(1, 10), Rational(1, 5)}));
  EXPECT_FALSE(mbs::intersects(wrap, mbs::ArcObj{Rational(1, 5), Rational(4, 5)}));
}

TEST(Geometry, ArcIntersectionMatchesPointSampling) {
  // Endpoints on a 1/12 grid; any common point is a grid point or lies
  // between two consecutive common grid points, so sampling at 1/24 decides.
  for (int s1 = 0; s1 < 12; ++s1)
    for (int e1 = 0; e1 < 12; ++e1)
      for (int s2 = 0; s2 < 12; s2 += 3)
        for (int e2 = 0; e2 < 12; e2 += 2) {
          if (s1 == e1 || s2 == e2) continue;
          mbs::ArcObj a{Rational(s1, 12), Rational(e1, 12)}, b{Rational(s2, 12), Rational(e2, 12)};
          bool sampled = false;
          for (int p = 0; p < 24 && !sampled; ++p) {
            Rational t(p, 24);
            sampled = mbs::arc_contains(a, t) && mbs::arc_contains(b, t);
          }
          EXPECT_EQ(mbs::intersects(a, b), sampled) << s1 << " " << e1 << " " << s2 << " " << e2;
        }
}

TEST(Geometry, ValidationRejectsMalformedObjects) {
  EXPECT_THROW(mbs::validate(GeometricInstance::make_intervals({{2, 2}})), mbs::ValidationError);
  EXPECT_THROW(mbs::validate(GeometricInstance::make_intervals({{3, 2}})), mbs::ValidationError);
  EXPECT_THROW(mbs::validate(GeometricInstance::make_arcs({{Rational(1, 2), Rational(1, 2)}})), mbs::ValidationError);
  EXPECT_THROW(mbs::validate(GeometricInstance::make_arcs({{0, 1}})), mbs::ValidationError);
  EXPECT_THROW(mbs::validate(GeometricInstance::make_arcs({{-Rational(1, 2), 0}})), mbs::ValidationError);
  EXPECT_THROW(mbs::validate(GeometricInstance::make_disks({{{0, 0}}}, 0)), mbs::ValidationError);
  EXPECT_THROW(mbs::validate(GeometricInstance::make_rects(Kind::unit_height_rects, {{0, 3, 0, 2}})),
               mbs::ValidationError);
  EXPECT_THROW(mbs::validate(GeometricInstance::make_rects(Kind::unit_squares, {{0, 2, 0, 1}})),
               mbs::ValidationError);
  EXPECT_THROW(mbs::validate(GeometricInstance::make_rects(Kind::rects, {{0, 0, 0, 1}})), mbs::ValidationError);
  EXPECT_NO_THROW(mbs::validate(GeometricInstance::make_rects(Kind::rects, {{0, 5, 0, 1}})));
}

TEST(Geometry, KindMustMatchPayload) {
  GeometricInstance bad{Kind::arcs, std::vector<mbs::IntervalObj>{{0, 1}}, 1};
  EXPECT_THROW(mbs::validate(bad), mbs::ValidationError);
  EXPECT_THROW(GeometricInstance::make_intervals({{0, 1}}).disks(), mbs::ValidationError);
}

TEST(Geometry, KindNamesRoundTrip) {
  for (Kind k : {Kind::intervals, Kind::arcs, Kind::unit_disks, Kind::unit_squares, Kind::unit_height_rects,
                 Kind::rects}) {
    EXPECT_EQ(mbs::parse_kind(mbs::kind_name(k)), k);
  }
  EXPECT_THROW(mbs::parse_kind("triangles"), mbs::ValidationError);
}

TEST(Geometry, SubinstanceKeepsOrder) {
  auto inst = GeometricInstance::make_intervals({{0, 1}, {2, 3}, {4, 5}});
  auto sub = mbs::subinstance(inst, {2, 0});
  ASSERT_EQ(sub.size(), 2u);
  EXPECT_EQ(sub.intervals()[0].left, 4);
  EXPECT_EQ(sub.intervals()[1].left, 0);
  EXPECT_THROW(mbs::subinstance(inst, {3}), mbs::ValidationError);
}

class GeometryProperty : public ::testing::TestWithParam<Kind> {};

TEST_P(GeometryProperty, TranslationPreservesTheGraph) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    mbs::GeneratorParams p{.kind = GetParam(), .n = 10, .seed = seed};
    auto inst = mbs::generate(p);
    auto moved = mbs::translate(inst, Rational(7, 3), Rational(-5, 11));
    EXPECT_EQ(mbs::build_intersection_graph(inst), mbs::build_intersection_graph(moved)) << seed;
  }
}

TEST_P(GeometryProperty, GraphIsSymmetricIrreflexiveAndMatchesPredicates) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    mbs::GeneratorParams p{.kind = GetParam(), .n = 12, .seed = seed};
    auto inst = mbs::generate(p);
    auto g = mbs::build_intersection_graph(inst);
    EXPECT_EQ(g, mbs::build_intersection_graph(inst));
    for (std::size_t i = 0; i < inst.size(); ++i) {
      EXPECT_FALSE(g.adjacent(i, i));
      for (std::size_t j = 0; j < inst.size(); ++j) {
        if (i == j) continue;
        EXPECT_EQ(g.adjacent(i, j), g.adjacent(j, i));
        EXPECT_EQ(g.adjacent(i, j), mbs::objects_intersect(inst, i, j));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllKinds, GeometryProperty,
                         ::testing::Values(Kind::intervals, Kind::arcs, Kind::unit_disks, Kind::unit_squares,
                                           Kind::unit_height_rects, Kind::rects),
                         [](const auto& info) { return std::string(mbs::kind_name(info.param)); });
