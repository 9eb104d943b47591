#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "capzip/errors.hpp"
#include "capzip/geom.hpp"

using namespace capzip;

namespace {

// Center of the rotation taking p->p2 and q->q2, from perpendicular bisectors.
Point2 bisector_center(Point2 p, Point2 p2, Point2 q, Point2 q2) {
  const Point2 m1 = (p + p2) * 0.5, d1 = perp(p2 - p);
  const Point2 m2 = (q + q2) * 0.5, d2 = perp(q2 - q);
  const double t = cross(m2 - m1, d2) / cross(d1, d2);
  return m1 + d1 * t;
}

double orient(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

std::vector<Point2> square(double x0, double y0) {
  return {{x0, y0}, {x0 + 1, y0}, {x0 + 1, y0 + 1}, {x0, y0 + 1}};
}

}  // namespace

TEST(SegIntersect, PerpendicularBisection) {
  auto r = seg_intersect({{0, 0}, {1, 0}}, {{0.5, -1}, {0.5, 1}});
  EXPECT_EQ(r.kind, IntersectionKind::Point);
  EXPECT_NEAR(r.point.x, 0.5, 1e-12);
  EXPECT_NEAR(r.point.y, 0.0, 1e-12);
}

TEST(SegIntersect, ParallelDisjoint) {
  auto r = seg_intersect({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}});
  EXPECT_EQ(r.kind, IntersectionKind::None);
}

TEST(SegIntersect, SharedEndpointIsTouch) {
  auto r = seg_intersect({{0, 0}, {1, 0}}, {{1, 0}, {2, 1}});
  EXPECT_EQ(r.kind, IntersectionKind::Touch);
  EXPECT_NEAR(r.point.x, 1.0, 1e-12);
  EXPECT_NEAR(r.point.y, 0.0, 1e-12);
}

TEST(SegIntersect, CollinearOverlap) {
  auto r = seg_intersect({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}});
  ASSERT_EQ(r.kind, IntersectionKind::Overlap);
  EXPECT_NEAR(r.point.x, 1.0, 1e-12);
  EXPECT_NEAR(r.point2.x, 2.0, 1e-12);
  EXPECT_EQ(seg_intersect({{0, 0}, {1, 0}}, {{1, 0}, {3, 0}}).kind, IntersectionKind::Touch);
  EXPECT_EQ(seg_intersect({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}).kind, IntersectionKind::None);
}

TEST(SegIntersect, ZeroLengthThrows) {
  EXPECT_THROW(seg_intersect({{0, 0}, {0, 0}}, {{0, 1}, {1, 1}}), GeometryError);
}

TEST(SegIntersect, AgreesWithOrientationOracle) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int touches = 0;
  for (int i = 0; i < 10000; ++i) {
    Segment2 s{{u(rng), u(rng)}, {u(rng), u(rng)}};
    Segment2 t{{u(rng), u(rng)}, {u(rng), u(rng)}};
    const bool share = i % 10 == 0;
    if (share) t.a = s.b;
    const auto r = seg_intersect(s, t);
    const auto r2 = seg_intersect(t, s);
    EXPECT_EQ(r.kind, r2.kind);
    if (share) {
      if (r.kind == IntersectionKind::Touch) ++touches;
      EXPECT_NE(r.kind, IntersectionKind::Point);
      continue;
    }
    const double o1 = orient(s.a, s.b, t.a), o2 = orient(s.a, s.b, t.b);
    const double o3 = orient(t.a, t.b, s.a), o4 = orient(t.a, t.b, s.b);
    const bool crosses = o1 * o2 < 0 && o3 * o4 < 0;
    // Random pairs are in general position; the Touch class needs an
    // endpoint within 1e-9, which has negligible probability here.
    EXPECT_EQ(r.kind == IntersectionKind::Point, crosses) << i;
    if (crosses) {
      // brute force: parametric solve in long double
      const long double ax = s.a.x, ay = s.a.y, bx = s.b.x - s.a.x, by = s.b.y - s.a.y;
      const long double cx = t.a.x, cy = t.a.y, dx = t.b.x - t.a.x, dy = t.b.y - t.a.y;
      const long double den = bx * dy - by * dx;
      const long double p = ((cx - ax) * dy - (cy - ay) * dx) / den;
      EXPECT_NEAR(r.point.x, static_cast<double>(ax + p * bx), 1e-9);
      EXPECT_NEAR(r.point.y, static_cast<double>(ay + p * by), 1e-9);
      EXPECT_NEAR(r.point.x, r2.point.x, 1e-12);
      EXPECT_NEAR(r.point.y, r2.point.y, 1e-12);
    }
  }
  EXPECT_EQ(touches, 1000);
}

TEST(ComposeRotations, SameCenter) {
  auto m = compose_rotations({{0, 0}, deg2rad(90)}, {{0, 0}, deg2rad(90)});
  ASSERT_FALSE(m.is_translation);
  EXPECT_NEAR(m.rotation.center.x, 0.0, 1e-12);
  EXPECT_NEAR(m.rotation.center.y, 0.0, 1e-12);
  EXPECT_NEAR(std::abs(m.rotation.angle), kPi, 1e-12);
}

TEST(ComposeRotations, TwoProbeOracle) {
  const double th = deg2rad(10);
  const Rotation2 r1{{0, 0}, th}, r2{{1, 0}, th};
  const auto m = compose_rotations(r1, r2);
  ASSERT_FALSE(m.is_translation);
  const Point2 p{0.3, -0.7}, q{-1.2, 0.4};
  const Point2 c = bisector_center(p, r2.apply(r1.apply(p)), q, r2.apply(r1.apply(q)));
  EXPECT_NEAR(m.rotation.center.x, c.x, 1e-9);
  EXPECT_NEAR(m.rotation.center.y, c.y, 1e-9);
  EXPECT_NEAR(m.rotation.angle, 2 * th, 1e-12);
}

TEST(ComposeRotations, CancellingAnglesGiveTranslation) {
  const Rotation2 r1{{0.2, 0.1}, deg2rad(17)}, r2{{1.5, -0.4}, deg2rad(-17)};
  const auto m = compose_rotations(r1, r2);
  ASSERT_TRUE(m.is_translation);
  const Point2 p{0.7, 0.9};
  const Point2 expect = r2.apply(r1.apply(p));
  EXPECT_NEAR(m.apply(p).x, expect.x, 1e-12);
  EXPECT_NEAR(m.apply(p).y, expect.y, 1e-12);
}

TEST(ComposeRotations, Associativity) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const Tolerance tol;
  for (int i = 0; i < 200; ++i) {
    const Rotation2 a{{u(rng), u(rng)}, u(rng)}, b{{u(rng), u(rng)}, u(rng)},
        c{{u(rng), u(rng)}, u(rng)};
    const auto ab = compose_rotations(a, b);
    const auto bc = compose_rotations(b, c);
    if (ab.is_translation || bc.is_translation) continue;
    const auto left = compose_rotations(ab.rotation, c);
    const auto right = compose_rotations(a, bc.rotation);
    for (const Point2 p : {Point2{0, 0}, Point2{1, 0.5}, Point2{-0.8, 1.3}}) {
      const Point2 direct = c.apply(b.apply(a.apply(p)));
      EXPECT_LT(distance(left.apply(p), direct), 10 * tol.eps_len);
      EXPECT_LT(distance(right.apply(p), direct), 10 * tol.eps_len);
    }
  }
}

TEST(Rigid2, FromSegmentsAndInverse) {
  const Rigid2 r = Rigid2::from_segments({0, 0}, {1, 0}, {2, 3}, {2, 4});
  EXPECT_NEAR(r.apply({1, 0}).x, 2.0, 1e-12);
  EXPECT_NEAR(r.apply({1, 0}).y, 4.0, 1e-12);
  const Point2 p{0.3, 0.8};
  const Point2 back = r.inverse().apply(r.apply(p));
  EXPECT_NEAR(back.x, p.x, 1e-12);
  EXPECT_NEAR(back.y, p.y, 1e-12);
  const Rigid2 s(0.4, {1, -1});
  EXPECT_NEAR(distance((r * s).apply(p), r.apply(s.apply(p))), 0.0, 1e-12);
}

TEST(PolyOverlap, HalfShiftedSquares) {
  EXPECT_NEAR(poly_overlap_area(square(0, 0), square(0.5, 0)), 0.5, 1e-12);
}

TEST(PolyOverlap, EdgeContactIsZero) {
  EXPECT_NEAR(poly_overlap_area(square(0, 0), square(1, 0)), 0.0, 1e-12);
}

TEST(PolyOverlap, DisjointTriangles) {
  std::vector<Point2> p{{0, 0}, {1, 0}, {0, 1}};
  std::vector<Point2> q{{1, 1}, {2, 1}, {1, 2}};
  EXPECT_EQ(poly_overlap_area(p, q), 0.0);
}

TEST(PolyOverlap, SelfIntersectingThrows) {
  std::vector<Point2> bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  EXPECT_THROW(poly_overlap_area(bowtie, square(0, 0)), GeometryError);
}

TEST(PolyOverlap, SelfOverlapEqualsArea) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> r(0.3, 1.0);
  for (int k = 0; k < 50; ++k) {
    // star-shaped polygon around the origin; non-convex in general
    std::vector<Point2> poly;
    const int n = 5 + k % 9;
    for (int i = 0; i < n; ++i) poly.push_back(unit(kTwoPi * i / n) * r(rng));
    const double a = polygon_area(poly);
    EXPECT_NEAR(poly_overlap_area(poly, poly), a, 1e-9 * a);
  }
}

TEST(PolyOverlap, NonConvexAgainstSquare) {
  // L-shape: unit square minus its upper-right quarter
  std::vector<Point2> ell{{0, 0}, {1, 0}, {1, 0.5}, {0.5, 0.5}, {0.5, 1}, {0, 1}};
  EXPECT_NEAR(polygon_area(ell), 0.75, 1e-12);
  EXPECT_NEAR(poly_overlap_area(ell, square(0.5, 0.5)), 0.0, 1e-12);
  EXPECT_NEAR(poly_overlap_area(ell, square(0.25, 0.25)), 0.3125, 1e-12);
}

TEST(Polygon, Triangulate) {
  std::vector<Point2> ell{{0, 0}, {1, 0}, {1, 0.5}, {0.5, 0.5}, {0.5, 1}, {0, 1}};
  const auto tris = triangulate(ell);
  ASSERT_EQ(tris.size(), 4u);
  double a = 0;
  for (const auto& t : tris) a += polygon_area(t);
  EXPECT_NEAR(a, 0.75, 1e-12);
}

TEST(Angles, NormalizeAndBetween) {
  EXPECT_NEAR(normalize_angle(3 * kPi), kPi, 1e-12);
  EXPECT_NEAR(normalize_angle(-kPi), kPi, 1e-12);
  EXPECT_NEAR(wrap_positive(-0.5), kTwoPi - 0.5, 1e-12);
  EXPECT_NEAR(angle_between(Point2{1, 0}, {0, 0}, {0, 2}), kPi / 2, 1e-12);
  EXPECT_NEAR(angle_between(Point3{1, 0, 0}, {0, 0, 0}, {-1, 0, 0}), kPi, 1e-12);
}

TEST(Tolerance, Validate) {
  EXPECT_NO_THROW(Tolerance{}.validate());
  EXPECT_THROW((Tolerance{0.0, 1e-9}.validate()), ParameterError);
}
