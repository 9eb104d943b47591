#pragma once

// Checks on candidate unzippings and the planar tools used to reason about
// them: radial monotonicity, combined rotation centers, turn angles.

#include <optional>
#include <string>
#include <vector>

#include "capzip/cap.hpp"
#include "capzip/cutpath.hpp"
#include "capzip/development.hpp"
#include "json.hpp"

namespace capzip {

struct Verdict {
  bool is_path = false;
  bool visits_all = false;
  bool endpoints_ok = false;
  int boundary_touches = 0;
  bool self_crossing = false;
  bool chains_cross = false;
  int crossings = 0;
  double layout_overlap_area = 0.0;
  bool left_C = false;
  int pieces = 0;
  bool layout_consistent = false;
  bool developed = false;
  bool unzipping = false;
  std::vector<std::string> reasons;  // empty iff unzipping
};

struct CheckOptions {
  // Cap labels enable the projected boundary tests; leave null for general
  // open or closed surfaces.
  const CapLabels* labels = nullptr;
  Tolerance tol{};
  double area_tol = 1e-9;
  DevelopOptions develop{};
};

// Verdict for `path` on surface `s` (the surface being unzipped) given its
// development `d`, which may have been traced on an extension of `s`.
Verdict evaluate_verdict(const Surface& s, const CutPath& path, const Development& d,
                         const CheckOptions& opt = {});

// Develops and checks on the open cap, allowing excursions onto the skirts.
Verdict check_unzipping(const Cap& cap, const CutPath& path, CheckOptions opt = {});
// Develops and checks on an arbitrary surface (e.g. the closed polyhedron).
Verdict check_unzipping(const Surface& s, const CutPath& path, const CheckOptions& opt = {});

struct MonotoneResult {
  bool monotone = true;
  int i = -1;  // reference vertex of the first violation
  int j = -1;  // segment (u_j, u_{j+1}) where the distance decreases
  Point2 witness{};
};

// A chain is radially monotone when, for every vertex u_i, the distance
// from u_i is non-decreasing along the rest of the chain.
MonotoneResult radially_monotone(const std::vector<Point2>& chain, double tol = 1e-12);
MonotoneResult radially_monotone(const PlanarChain& chain, double tol = 1e-12);

// (w1 p1 + w2 p2) / (w1 + w2). Throws ParameterError when w1 + w2 == 0.
Point2 combined_center_approx(double w1, const Point2& p1, double w2, const Point2& p2);
// Center of the composition of the two rotations. Throws GeometryError when
// the composition is a translation.
Point2 combined_center_exact(double w1, const Point2& p1, double w2, const Point2& p2);

enum class ChainSide { R, L };
enum class TurnTarget {
  OppositeImage,  // the other chain's image of the same stop
  Departure,      // the first point after the stop on the same chain
  NextMark,       // the next stop image on the same chain
};

// Unsigned angle at the image of stop i between the previous stop image
// and the chosen target. Throws ParameterError on out-of-range stops.
double effective_turn_angle(const Development& d, ChainSide side, int stop,
                            TurnTarget target = TurnTarget::OppositeImage);

// Projected angle at `v` between the directions to `prev` and `next` in the
// base-plane projection of the cap. Throws ParameterError when v is the apex.
double apron_turn_budget(const Cap& cap, int prev, int v, int next);

// Least d with theta / d < 2 pi. Throws ParameterError unless theta > 0.
int min_cut_degree(double theta);

nlohmann::json to_json(const Verdict& v);

}  // namespace capzip
