#include <gtest/gtest.h>

#include <cmath>

#include "capzip/errors.hpp"
#include "capzip/surface.hpp"
#include "test_support.hpp"

using namespace capzip;
using capzip::testing::flat_square;
using capzip::testing::solid;
using capzip::testing::standard_params;

TEST(Surface, CubeIsClosedSphere) {
  const Surface s = solid("cube");
  EXPECT_TRUE(s.is_closed());
  EXPECT_EQ(s.num_vertices(), 8);
  EXPECT_EQ(s.num_faces(), 6);
  EXPECT_EQ(s.num_edges(), 12);
  EXPECT_EQ(s.euler_characteristic(), 2);
  for (int v = 0; v < 8; ++v) EXPECT_NEAR(s.total_angle(v), 1.5 * kPi, 1e-12);
  EXPECT_NEAR(total_curvature(s), 4 * kPi, 1e-12);
}

TEST(Surface, CapIsDisk) {
  const Cap cap = build_cap(standard_params());
  const Surface& s = cap.surface;
  EXPECT_FALSE(s.is_closed());
  EXPECT_EQ(s.euler_characteristic(), 1);
  ASSERT_EQ(s.boundary_loops().size(), 1u);
  EXPECT_EQ(s.boundary_loops()[0].size(), 3u);
  for (int b : cap.labels.b) EXPECT_TRUE(s.is_boundary_vertex(b));
  EXPECT_THROW(vertex_curvature(s, cap.labels.b[0]), ParameterError);
}

TEST(Surface, BoundaryTurnsSumToTwoPiMinusCurvature) {
  const Cap cap = build_cap(standard_params());
  double turn = 0.0;
  for (int b : cap.labels.b) turn += boundary_turn(cap.surface, b);
  // Gauss-Bonnet on a disk
  EXPECT_NEAR(turn + total_curvature(cap.surface), kTwoPi, 1e-12);
}

TEST(Surface, FanAnglesSumToTotal) {
  const Cap cap = build_cap(standard_params());
  for (int v : cap.labels.interior()) {
    double sum = 0.0;
    for (const auto& c : cap.surface.fan(v)) sum += c.angle;
    EXPECT_NEAR(sum, cap.surface.total_angle(v), 1e-12);
    EXPECT_NEAR(sum + vertex_curvature(cap.surface, v), kTwoPi, 1e-12);
  }
}

TEST(Surface, FanCoordinateRoundTrip) {
  const Cap cap = build_cap(standard_params());
  const Surface& s = cap.surface;
  const int c = cap.labels.c;
  for (double t = 0.05; t < s.total_angle(c); t += 0.37) {
    const TangentDir d = s.fan_direction(c, t);
    EXPECT_NEAR(s.fan_coordinate(c, d), t, 1e-12);
  }
  // interior vertices wrap
  const TangentDir w = s.fan_direction(c, s.total_angle(c) + 0.1);
  EXPECT_NEAR(s.fan_coordinate(c, w), 0.1, 1e-12);
  EXPECT_THROW(s.fan_direction(cap.labels.b[0], 3.0), ParameterError);
}

TEST(Surface, IncidentAngleSplitClosesUp) {
  const Cap cap = build_cap(standard_params());
  const Surface& s = cap.surface;
  const int c = cap.labels.c;
  const AngleSplit sp = incident_angle_split(s, c, s.fan_direction(c, 0.3), s.fan_direction(c, 2.0));
  EXPECT_NEAR(sp.rho + sp.lambda + sp.omega, kTwoPi, 1e-12);
  EXPECT_NEAR(sp.omega, deg2rad(10.0), 1e-9);
  EXPECT_GT(sp.rho, 0.0);
  EXPECT_GT(sp.lambda, 0.0);
}

TEST(Surface, HingeMapsSharedEdge) {
  const Surface s = solid("octahedron");
  for (int f = 0; f < s.num_faces(); ++f) {
    for (int k = 0; k < s.face_size(f); ++k) {
      const EdgeRef tw = s.twin(f, k);
      ASSERT_TRUE(tw.valid());
      const Rigid2 h = s.hinge(f, k);
      const int m = s.face_size(tw.face);
      const Point2 p = h.apply(s.chart(tw.face)[tw.k]);
      const Point2 q = h.apply(s.chart(tw.face)[(tw.k + 1) % m]);
      EXPECT_NEAR(distance(p, s.chart(f)[(k + 1) % s.face_size(f)]), 0.0, 1e-12);
      EXPECT_NEAR(distance(q, s.chart(f)[k]), 0.0, 1e-12);
    }
  }
}

TEST(Surface, LiftAndChartAgree) {
  const Cap cap = build_cap(standard_params());
  const Surface& s = cap.surface;
  for (int f = 0; f < s.num_faces(); ++f) {
    for (int k = 0; k < s.face_size(f); ++k) {
      EXPECT_NEAR(distance(s.lift(f, s.chart(f)[k]), s.vertex(s.face(f)[k])), 0.0, 1e-12);
    }
  }
}

TEST(Surface, PointsAndLocation) {
  const Surface s = flat_square();
  const SurfacePoint e = SurfacePoint::on_edge(0, 1, 0.25);
  EXPECT_NEAR(distance(position(s, e), Point3{0.25, 0, 0}), 0.0, 1e-15);
  EXPECT_TRUE(is_on_boundary(s, e));
  EXPECT_FALSE(is_on_boundary(s, SurfacePoint::at_vertex(4)));
  EXPECT_EQ(SurfacePoint::on_edge(0, 1, 0.0), SurfacePoint::at_vertex(0));
  EXPECT_EQ(locate(s, SurfacePoint::at_vertex(4)).size(), 4u);
  EXPECT_EQ(locate(s, SurfacePoint::on_edge(1, 4, 0.5)).size(), 2u);
  EXPECT_NEAR(s.area(), 1.0, 1e-15);
  EXPECT_NEAR(vertex_curvature(s, 4), 0.0, 1e-12);
}

TEST(Surface, RejectsBadFaces) {
  // non-planar quad
  EXPECT_THROW(Surface({{0, 0, 0}, {1, 0, 0}, {1, 1, 0.3}, {0, 1, 0}}, {{0, 1, 2, 3}}),
               GeometryError);
  // face referencing a missing vertex
  EXPECT_ANY_THROW(Surface({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 5}}));
  // edge used twice in the same direction
  EXPECT_THROW(Surface({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, {{0, 1, 2}, {0, 1, 3}}),
               GeometryError);
}
