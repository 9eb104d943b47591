#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "capzip/analysis.hpp"
#include "capzip/errors.hpp"
#include "capzip/search.hpp"
#include "test_support.hpp"

using namespace capzip;
using capzip::testing::standard_params;

namespace {

// Flat 3x2 grid of unit squares; vertices 5 and 6 are interior.
Surface flat_grid() {
  std::vector<Point3> v;
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 4; ++x) v.push_back({double(x), double(y), 0.0});
  }
  std::vector<std::vector<int>> f;
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < 3; ++x) {
      const int a = y * 4 + x;
      f.push_back({a, a + 1, a + 5});
      f.push_back({a, a + 5, a + 4});
    }
  }
  return Surface(v, f);
}

bool dense_monotone(const std::vector<Point2>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    double last = 0.0;
    for (std::size_t j = i; j + 1 < c.size(); ++j) {
      for (int k = 1; k <= 1000; ++k) {
        const double r = distance(c[j] + (c[j + 1] - c[j]) * (k / 1000.0), c[i]);
        if (r < last - 1e-12) return false;
        last = std::max(last, r);
      }
    }
  }
  return true;
}

}  // namespace

TEST(RadialMonotone, Examples) {
  EXPECT_TRUE(radially_monotone(std::vector<Point2>{{0, 0}, {1, 0}, {2, 0}}).monotone);
  // an 80 degree corner at u_1 fails with respect to u_0
  const Point2 u1{1, 0};
  const Point2 u2 = u1 + unit(kPi - deg2rad(80.0));
  const MonotoneResult r = radially_monotone(std::vector<Point2>{{0, 0}, u1, u2});
  EXPECT_FALSE(r.monotone);
  EXPECT_EQ(r.i, 0);
  EXPECT_EQ(r.j, 1);
  EXPECT_EQ(r.witness, u1);
  // 100 degrees is fine
  const Point2 u3 = u1 + unit(kPi - deg2rad(100.0));
  EXPECT_TRUE(radially_monotone(std::vector<Point2>{{0, 0}, u1, u3}).monotone);
  EXPECT_THROW(radially_monotone(std::vector<Point2>{{0, 0}}), ParameterError);
}

TEST(RadialMonotone, AgreesWithSampling) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> turn(-2.0, 2.0), len(0.1, 1.0);
  for (int t = 0; t < 200; ++t) {
    std::vector<Point2> c{{0, 0}};
    double h = 0.0;
    for (int k = 0; k < 5; ++k) {
      h += turn(rng) * (t % 3 == 0 ? 1.0 : 0.3);
      c.push_back(c.back() + unit(h) * len(rng));
    }
    EXPECT_EQ(radially_monotone(c).monotone, dense_monotone(c)) << t;
  }
}

TEST(CombinedCenter, Approximation) {
  const Point2 p{0, 0}, q{1, 0};
  EXPECT_EQ(combined_center_approx(0.1, p, 0.1, q), Point2(0.5, 0.0));
  EXPECT_EQ(combined_center_approx(0.1, p, 0.0, q), p);
  EXPECT_THROW(combined_center_approx(0.1, p, -0.1, q), ParameterError);
  EXPECT_THROW(combined_center_exact(0.1, p, -0.1, q), GeometryError);
}

TEST(CombinedCenter, FirstOrderAgreement) {
  const Cap cap = build_cap(standard_params());
  const Point2 a1 = project_xy(cap.surface.vertex(cap.labels.a[0]));
  const Point2 c = project_xy(cap.surface.vertex(cap.labels.c));
  const double wa = deg2rad(5.0), wc = deg2rad(10.0);
  const double gap = distance(combined_center_exact(wa, a1, wc, c),
                              combined_center_approx(wa, a1, wc, c));
  EXPECT_NEAR(gap, 0.016818, 1e-5);  // regression baseline
  EXPECT_LT(gap, 0.02);
  const double half = distance(combined_center_exact(wa / 2, a1, wc / 2, c),
                               combined_center_approx(wa / 2, a1, wc / 2, c));
  EXPECT_GE(gap / half, 1.8);
  EXPECT_LE(gap / half, 2.2);
}

TEST(TurnAngle, CollinearIsStraight) {
  const Surface s = flat_grid();
  CutPath p;
  p.stops = {SurfacePoint::at_vertex(5), SurfacePoint::at_vertex(6), SurfacePoint::at_vertex(7)};
  p.segments.assign(2, SegmentGeom::geodesic());
  const Development d = develop_cut(s, p);
  EXPECT_NEAR(effective_turn_angle(d, ChainSide::R, 1, TurnTarget::NextMark), kPi, 1e-12);
  EXPECT_NEAR(effective_turn_angle(d, ChainSide::L, 1, TurnTarget::Departure), kPi, 1e-12);
  EXPECT_THROW(effective_turn_angle(d, ChainSide::R, 0), ParameterError);
  EXPECT_THROW(effective_turn_angle(d, ChainSide::R, 2), ParameterError);
}

TEST(TurnAngle, LemmaAngles) {
  const LemmaReport l1 = run_lemma_scenario(1, standard_params());
  EXPECT_GE(rad2deg(l1.angles[0].value), 65.0);
  EXPECT_LE(rad2deg(l1.angles[0].value), 75.0);
  EXPECT_NEAR(rad2deg(l1.angles[0].budget), 30.0, 0.5);
  const LemmaReport l4 = run_lemma_scenario(4, standard_params());
  EXPECT_GE(rad2deg(l4.angles[0].value), 85.0);
  EXPECT_LE(rad2deg(l4.angles[0].value), 95.0);
}

TEST(ApronBudget, ProjectedTurns) {
  for (double eps : {0.1, 0.01, 0.001}) {
    const Cap cap = build_cap(solve_params_for_curvatures(deg2rad(5.0), deg2rad(10.0), eps));
    const auto& l = cap.labels;
    // caaab visits c, a2, a3, a1: 30 degrees at a3 and 60 at a1
    EXPECT_NEAR(rad2deg(apron_turn_budget(cap, l.a[1], l.a[2], l.a[0])), 60.0, 1e-9);
    const double t = rad2deg(apron_turn_budget(cap, l.c, l.a[1], l.a[2]));
    EXPECT_NEAR(t, 30.0, 1e-9);
    EXPECT_THROW(apron_turn_budget(cap, l.a[0], l.c, l.a[1]), ParameterError);
    EXPECT_THROW(apron_turn_budget(cap, l.a[0], l.b[0], l.a[1]), ParameterError);
  }
  const LemmaReport l2 = run_lemma_scenario(2, standard_params());
  EXPECT_NEAR(rad2deg(l2.angles[0].budget), 30.0, 0.5);
  EXPECT_NEAR(rad2deg(l2.angles[1].budget), 60.0, 0.5);
  const LemmaReport l4 = run_lemma_scenario(4, standard_params());
  EXPECT_NEAR(rad2deg(l4.angles[0].budget), 60.0, 0.5);
}

TEST(MinCutDegree, Bound) {
  EXPECT_EQ(min_cut_degree(8 * kPi + 0.01), 5);
  EXPECT_EQ(min_cut_degree(4 * kPi + 0.01), 3);
  EXPECT_EQ(min_cut_degree(kPi), 1);
  for (double theta = 0.1; theta < 30.0; theta += 0.173) {
    const int d = min_cut_degree(theta);
    EXPECT_GT(d * kTwoPi, theta);
    EXPECT_LE((d - 1) * kTwoPi, theta);
  }
  EXPECT_THROW(min_cut_degree(0.0), ParameterError);
  const Surface fan = capzip::testing::solid("pleated_fan");
  EXPECT_GT(fan.total_angle(0), 4 * kPi);
  EXPECT_GE(min_cut_degree(fan.total_angle(0)), 3);
}

TEST(Verdict, StraightPathsFail) {
  const Cap cap = build_cap(standard_params());
  for (int n = 1; n <= 4; ++n) {
    const Verdict v =
        check_unzipping(cap, straight_path(cap.surface, cap.labels, lemma_path_type(n)));
    EXPECT_FALSE(v.unzipping);
    EXPECT_TRUE(v.chains_cross);
    EXPECT_TRUE(v.is_path);
    EXPECT_TRUE(v.visits_all);
    EXPECT_TRUE(v.endpoints_ok);
    EXPECT_FALSE(v.reasons.empty());
  }
}

TEST(Verdict, ArcPathLeavesTheCap) {
  const Cap cap = build_cap(standard_params());
  const Verdict v =
      check_unzipping(cap, lemma_arc_path(cap.surface, cap.labels, lemma_path_type(1)));
  EXPECT_FALSE(v.unzipping);
  EXPECT_TRUE(v.left_C);
  EXPECT_FALSE(v.chains_cross);
  EXPECT_NE(std::find(v.reasons.begin(), v.reasons.end(), "left-C"), v.reasons.end());
}

TEST(Verdict, ClosedUnzipping) {
  const Cap cap = build_cap(standard_params());
  const CutPath p = extend_path_over_base(
      lemma_arc_path(cap.surface, cap.labels, lemma_path_type(1)), cap.labels);
  const Verdict v = check_unzipping(close_with_base(cap.surface, cap.labels), p);
  EXPECT_TRUE(v.unzipping);
  EXPECT_EQ(v.pieces, 1);
  EXPECT_TRUE(v.reasons.empty());
  EXPECT_EQ(to_json(v).at("schema"), "capzip.verdict/1");
}

TEST(Verdict, PathMissingVertices) {
  const Cap cap = build_cap(standard_params());
  const auto& l = cap.labels;
  CutPath p;
  p.stops = {SurfacePoint::at_vertex(l.c), SurfacePoint::on_edge(l.b[0], l.b[1], 0.5)};
  p.segments = {SegmentGeom::geodesic()};
  const Verdict v = check_unzipping(cap, p);
  EXPECT_FALSE(v.visits_all);
  EXPECT_FALSE(v.unzipping);
}
