#pragma once

// Development of a cut path into the plane.
//
// Two independent computations of the same immersion are kept side by
// side: the R and L chains, built by turning through the recorded surface
// angles at each stop, and the face layout, built by splitting the faces
// along the traced cut and unfolding them across uncut edges.

#include <optional>
#include <string>
#include <vector>

#include "capzip/cap.hpp"
#include "capzip/cutpath.hpp"
#include "capzip/geodesic.hpp"
#include "capzip/layout.hpp"
#include "json.hpp"

namespace capzip {

struct ChainMark {
  int point = -1;  // index into PlanarChain::points
  int stop = -1;
  bool interior = true;  // false for the exit point on the boundary
  double rho = 0.0;
  double lambda = 0.0;
  double omega = 0.0;
};

struct PlanarChain {
  std::vector<Point2> points;
  std::vector<ChainMark> marks;    // one per stop, in order
  std::vector<int> segment_start;  // first point index of each segment

  // Number of legs (consecutive point pairs).
  int num_legs() const { return points.empty() ? 0 : static_cast<int>(points.size()) - 1; }
  Point2 image(int stop) const { return points.at(marks.at(stop).point); }
  // Segment index owning leg i.
  int segment_of_leg(int leg) const;
};

struct DevelopedSegment {
  SegmentGeom::Kind kind = SegmentGeom::Kind::Geodesic;
  GeodesicSegment geodesic;
  std::vector<Point2> frame;  // chord frame, (0,0) -> (length,0)
  double theta_ref = 0.0;     // fan coordinate of the frame's +x axis at the start stop
  Rigid2 place_r;             // frame -> R plane
  Rigid2 place_l;             // frame -> L plane
  TracedCurve trace;
};

struct Development {
  std::string name;
  Surface surface;  // the surface the cut was traced on
  bool extended = false;  // traced on the cap plus skirts
  PlanarChain R;
  PlanarChain L;
  std::vector<DevelopedSegment> segments;
  Layout layout;
  bool has_layout = false;
  // Stop images read off the face layout (unset where unplaced).
  std::vector<std::optional<Point2>> layout_r;
  std::vector<std::optional<Point2>> layout_l;

  // Every traced 3D point of the cut, in order.
  std::vector<Point3> trace_points() const;
};

struct DevelopOptions {
  TraceOptions trace{};
  GeodesicOptions geodesic{};
  LayoutOptions layout{};
  bool build_layout = true;
};

// Develops `path` on `s`. Throws LeavesSurfaceError when the path runs off
// the surface and GeometryError when a segment cannot be realised.
Development develop_cut(const Surface& s, const CutPath& path, const DevelopOptions& opt = {});

// Develops on the cap, switching to the skirted surface when the path
// leaves C (sets `extended`).
Development develop_on_cap(const Cap& cap, const CutPath& path, const DevelopOptions& opt = {});

struct ChainCrossing {
  int r_leg = -1;
  int l_leg = -1;
  Point2 point{};
  bool overlap = false;
};

struct OverlapReport {
  std::vector<ChainCrossing> crossings;
  double layout_overlap_area = 0.0;
  std::vector<OverlapPair> overlap_pairs;
  bool chains_cross = false;
  bool layout_overlaps = false;
};

// Transversal or collinear-overlap contacts between R and L, excluding
// touches and pairs where R and L coincide. Nearby duplicates are merged.
OverlapReport chains_cross(const Development& d, const Tolerance& tol = {});
// Area part only (zero when the development has no layout).
OverlapReport layout_overlaps(const Development& d, double area_tol = 1e-9);
// Both parts.
OverlapReport overlap_report(const Development& d, const Tolerance& tol = {},
                             double area_tol = 1e-9);

// Largest distance between a chain mark and the same image in the layout.
double oracle_gap(const Development& d);

// Appends the base-edge stops b_3 -> b_1 -> b_2 (relative to the path's
// final b vertex) as geodesic segments. Throws ParameterError unless the
// path ends at a b vertex.
CutPath extend_path_over_base(const CutPath& path, const CapLabels& labels);

nlohmann::json to_json(const PlanarChain& c);
nlohmann::json to_json(const Development& d, const CapLabels* labels = nullptr);

}  // namespace capzip
