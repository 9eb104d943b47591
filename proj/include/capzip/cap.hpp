#pragma once

// The parametric convex cap: an inner equilateral triangle a1 a2 a3 of unit
// side at height z_a, an apex c above its centroid at height z_c, and an
// apron of three planar trapezoids dropping to the base triangle b1 b2 b3
// in the plane z = 0. Each b_i lies a distance epsilon beyond a_i along the
// ray from the centroid, so the apron's projected width is epsilon / 2.

#include <array>
#include <string>
#include <vector>

#include "capzip/surface.hpp"
#include "json.hpp"

namespace capzip {

struct CapParams {
  double epsilon = 0.1;
  double z_a = 0.02;
  double z_c = 0.1;

  // Throws ParameterError unless 0 < epsilon and 0 < z_a < z_c.
  void validate() const;
};

struct CapLabels {
  std::array<int, 3> b{0, 1, 2};
  std::array<int, 3> a{3, 4, 5};
  int c = 6;

  std::vector<int> interior() const { return {a[0], a[1], a[2], c}; }
  // "a1", "b3", "c", ... for a vertex id; "v<id>" otherwise.
  std::string name(int v) const;
  // Inverse of name(); throws ParameterError on unknown names.
  int id(const std::string& name) const;
  bool is_a(int v) const;
  bool is_b(int v) const;
  // 0-based index among the a's (or b's), -1 if not one.
  int a_index(int v) const;
  int b_index(int v) const;
};

struct Cap {
  CapParams params;
  Surface surface;  // the cap C, a disk
  CapLabels labels;
};

// Builds C. Throws ParameterError when the parameters are invalid or the
// surface fails convexity validation.
Cap build_cap(const CapParams& params);
// Same construction with no parameter or convexity checks (for probing
// degenerate and non-convex configurations).
Cap build_cap_unchecked(const CapParams& params);

// C plus three flat skirt triangles in the base plane, one glued along each
// base edge (tagged kExtensionTag), so that curves may leave C and return.
Surface extend_with_skirts(const Cap& cap);

// The closed polyhedron P: C plus the base triangle (b1, b3, b2), tag 2.
inline constexpr int kBaseTag = 2;
Surface close_with_base(const Surface& s, const CapLabels& labels);

// Max angle between a face normal and +z. Throws ParameterError when a
// face faces downward (e.g. the base of a closed polyhedron).
double cap_phi(const Surface& s);

struct ConvexityReport {
  bool convex = false;
  bool degenerate = false;  // exactly flat: every dihedral and curvature zero
  double min_curvature = 0.0;
  double max_fold = 0.0;  // largest offset of a neighbour vertex above a face plane
};

ConvexityReport convexity_report(const Surface& s, double tol = 1e-9);
// True iff every interior edge folds convexly and every interior vertex
// curvature is positive; an exactly flat surface also counts (degenerate).
bool validate_convex(const Surface& s, double tol = 1e-9);

// Heights (z_a, z_c) whose cap has the requested curvatures at a_i and c.
// Throws ConvergenceError when no solution exists in (0, 1)^2.
CapParams solve_params_for_curvatures(double omega_a, double omega_c, double epsilon);

enum class CapRegion { Interior, OnBoundary, Outside };
const char* to_string(CapRegion r);

// Classifies a point of the base plane against the projected base triangle.
CapRegion point_on_cap(const Surface& s, const CapLabels& labels, const Point2& p,
                       double tol = 1e-9);

struct CapReport {
  double omega_a[3];
  double omega_c;
  double phi;
  bool convex;
};
CapReport cap_report(const Cap& cap);

nlohmann::json to_json(const CapParams& p);
CapParams cap_params_from_json(const nlohmann::json& j);
nlohmann::json cap_to_json(const Cap& cap);

}  // namespace capzip
