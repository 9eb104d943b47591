#include <gtest/gtest.h>

#include <cmath>

#include "capzip/cap.hpp"
#include "capzip/errors.hpp"
#include "test_support.hpp"

using namespace capzip;
using capzip::testing::standard_params;

TEST(Cap, Combinatorics) {
  const Cap cap = build_cap({0.1, 0.02, 0.1});
  EXPECT_EQ(cap.surface.num_vertices(), 7);
  EXPECT_EQ(cap.surface.num_faces(), 6);
  int quads = 0;
  for (int f = 0; f < 6; ++f) quads += cap.surface.face_size(f) == 4;
  EXPECT_EQ(quads, 3);
  EXPECT_EQ(cap.labels.name(cap.labels.c), "c");
  EXPECT_EQ(cap.labels.id("a2"), cap.labels.a[1]);
  EXPECT_EQ(cap.labels.id("b3"), cap.labels.b[2]);
}

TEST(Cap, KnownCurvatures) {
  const Cap cap = build_cap({0.1, 0.02, 0.1});
  const CapReport r = cap_report(cap);
  for (double w : r.omega_a) EXPECT_NEAR(rad2deg(w), 1.9, 0.05);
  EXPECT_NEAR(rad2deg(r.omega_c), 5.6, 0.05);
  EXPECT_TRUE(r.convex);
  EXPECT_LT(rad2deg(r.phi), 25.0);
}

TEST(Cap, Geometry) {
  const double eps = 0.1;
  const Cap cap = build_cap({eps, 0.02, 0.1});
  const Surface& s = cap.surface;
  for (int i = 0; i < 3; ++i) {
    const Point3 b = s.vertex(cap.labels.b[i]), b2 = s.vertex(cap.labels.b[(i + 1) % 3]);
    const Point3 a = s.vertex(cap.labels.a[i]), a2 = s.vertex(cap.labels.a[(i + 1) % 3]);
    // unit inner triangle; each b sits eps further out along the bisector
    EXPECT_NEAR(distance(a, a2), 1.0, 1e-12);
    EXPECT_NEAR(distance(b, b2), 1.0 + std::sqrt(3.0) * eps, 1e-12);
    EXPECT_NEAR(b.z, 0.0, 1e-15);
    EXPECT_NEAR(distance(project_xy(a), project_xy(b)), eps, 1e-12);
  }
  Point2 centroid{};
  for (int b : cap.labels.b) centroid += project_xy(s.vertex(b)) / 3.0;
  EXPECT_NEAR(distance(project_xy(s.vertex(cap.labels.c)), centroid), 0.0, 1e-12);
  // every face planar
  for (int f = 0; f < s.num_faces(); ++f) {
    const Point3 n = s.normal(f), o = s.vertex(s.face(f)[0]);
    for (int v : s.face(f)) EXPECT_NEAR(dot(s.vertex(v) - o, n), 0.0, 1e-12);
  }
}

TEST(Cap, FlatLimit) {
  const Cap cap = build_cap({0.1, 0.02e-4, 0.1e-4});
  for (int v : cap.labels.interior()) {
    EXPECT_GT(vertex_curvature(cap.surface, v), 0.0);
    EXPECT_LT(vertex_curvature(cap.surface, v), 1e-8);
  }
  EXPECT_LT(cap_phi(cap.surface), 1e-4);
}

TEST(Cap, InvalidParameters) {
  EXPECT_THROW(build_cap({0.0, 0.02, 0.1}), ParameterError);
  EXPECT_THROW(build_cap({0.1, 0.0, 0.1}), ParameterError);
  EXPECT_THROW(build_cap({0.1, 0.1, 0.05}), ParameterError);
}

TEST(Cap, SolveForCurvatures) {
  for (double wa : {0.5, 2.0, 5.0, 10.0}) {
    for (double wc : {0.5, 5.0, 10.0}) {
      for (double eps : {0.002, 0.05, 0.1}) {
        const CapParams p = solve_params_for_curvatures(deg2rad(wa), deg2rad(wc), eps);
        const CapReport r = cap_report(build_cap(p));
        EXPECT_NEAR(rad2deg(r.omega_a[0]), wa, 1e-9);
        EXPECT_NEAR(rad2deg(r.omega_c), wc, 1e-9);
        EXPECT_TRUE(r.convex);
      }
    }
  }
  EXPECT_THROW(solve_params_for_curvatures(-0.1, 0.1, 0.1), ParameterError);
}

TEST(Cap, Convexity) {
  EXPECT_TRUE(validate_convex(build_cap(standard_params()).surface));
  // a tall apex over a low apron leaves the a vertices saddle-shaped
  const Cap bad = build_cap_unchecked({0.1, 0.02, 0.3});
  EXPECT_LT(vertex_curvature(bad.surface, bad.labels.a[0]), 0.0);
  EXPECT_THROW(build_cap({0.1, 0.02, 0.3}), ParameterError);
  const ConvexityReport r = convexity_report(bad.surface);
  EXPECT_FALSE(r.convex);
}

TEST(Cap, ClosedWithBase) {
  const Cap cap = build_cap(standard_params());
  const Surface p = close_with_base(cap.surface, cap.labels);
  EXPECT_TRUE(p.is_closed());
  EXPECT_EQ(p.euler_characteristic(), 2);
  EXPECT_NEAR(total_curvature(p), 4 * kPi, 1e-12);
  EXPECT_TRUE(validate_convex(p));
  int base = 0;
  for (int f = 0; f < p.num_faces(); ++f) base += p.tag(f) == kBaseTag;
  EXPECT_EQ(base, 1);
}

TEST(Cap, SkirtsExtendFlat) {
  const Cap cap = build_cap(standard_params());
  const Surface x = extend_with_skirts(cap);
  EXPECT_EQ(x.num_faces(), 9);
  for (int v : cap.labels.interior()) {
    EXPECT_NEAR(vertex_curvature(x, v), vertex_curvature(cap.surface, v), 1e-12);
  }
  for (int f = 0; f < x.num_faces(); ++f) {
    if (x.tag(f) == kExtensionTag) EXPECT_NEAR(x.normal(f).z, 1.0, 1e-12);
  }
}

TEST(Cap, PointRegions) {
  const Cap cap = build_cap(standard_params());
  const auto& s = cap.surface;
  const auto& l = cap.labels;
  const Point2 c = project_xy(s.vertex(l.c));
  EXPECT_EQ(point_on_cap(s, l, c), CapRegion::Interior);
  const Point2 b0 = project_xy(s.vertex(l.b[0])), b1 = project_xy(s.vertex(l.b[1]));
  EXPECT_EQ(point_on_cap(s, l, (b0 + b1) * 0.5), CapRegion::OnBoundary);
  EXPECT_EQ(point_on_cap(s, l, (b0 + b1) * 0.5 + ((b0 + b1) * 0.5 - c) * 0.1), CapRegion::Outside);
}

TEST(Cap, Json) {
  const Cap cap = build_cap(standard_params());
  const auto j = cap_to_json(cap);
  EXPECT_EQ(j.at("schema"), "capzip.cap/1");
  EXPECT_NEAR(j.at("curvature_deg").at("c").get<double>(), 10.0, 1e-9);
  const CapParams p = cap_params_from_json(to_json(cap.params));
  EXPECT_EQ(p.epsilon, cap.params.epsilon);
  EXPECT_EQ(p.z_a, cap.params.z_a);
  EXPECT_EQ(p.z_c, cap.params.z_c);
  EXPECT_THROW(cap_params_from_json(nlohmann::json{{"epsilon", 0.1}}), ParseError);
}
