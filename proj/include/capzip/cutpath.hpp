#pragma once

// Cut paths on the cap: ordered stops plus the shape of every segment.
//
// Segment shapes live in a chord frame: origin at the segment's first stop,
// +x along the straight (geodesic) segment to the next stop.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "capzip/cap.hpp"
#include "capzip/surface.hpp"
#include "json.hpp"

namespace capzip {

enum class CutType { caaab, acaab, aacab, aaacb };
const char* to_string(CutType t);
CutType cut_type_from_string(const std::string& s);

struct ExitSpec {
  enum class Kind { Vertex, EdgePoint };
  Kind kind = Kind::Vertex;
  int b = 0;       // Vertex: index of b_i (0-based)
  int b2 = 1;      // EdgePoint: the edge b[b] -> b[b2]
  double t = 0.5;  // EdgePoint: parameter along it
};

struct PathType {
  CutType type = CutType::acaab;
  std::array<int, 3> a_order{0, 1, 2};  // order in which the a's are visited
  std::optional<ExitSpec> exit;         // unset: the default exit
};

// The four canonical templates (caaab, acaab, aacab, aaacb).
std::vector<PathType> enumerate_cut_types();

// Default exit: the b nearest the last a stop; for paths whose last
// interior stop is c, the midpoint of the base edge parallel to the single
// a-edge the path does not run along.
ExitSpec default_exit(const PathType& t);

// The stop sequence of a template, exit included.
std::vector<SurfacePoint> stops_for(const CapLabels& labels, const PathType& t);

// Pattern of a vertex order (c and three a's) as a cut type.
CutType classify_order(const CapLabels& labels, const std::vector<int>& order);

struct ArcCenter {
  enum class Kind { StopImage, Combined };
  Kind kind = Kind::StopImage;
  int i = 0;  // stop index; the image used is on the R chain
  int j = 0;  // Combined only: second stop, weighted by curvature
};

enum class ArcSweep { Short, Ccw, Cw };

struct SegmentGeom {
  enum class Kind { Geodesic, Arc, Polyline };
  Kind kind = Kind::Geodesic;
  // Arc
  ArcCenter center;
  ArcSweep sweep = ArcSweep::Short;
  int samples = 64;
  // Polyline: chord-frame points scaled so the chord is (0,0) -> (1,0).
  std::vector<Point2> points;

  static SegmentGeom geodesic();
  static SegmentGeom arc(ArcCenter center, int samples = 64, ArcSweep sweep = ArcSweep::Short);
  static SegmentGeom polyline(std::vector<Point2> normalized_points);
  // Throws ParameterError on too few arc samples or a non-simple polyline.
  void validate() const;
};

struct CutPath {
  std::string name;  // e.g. "acaab"
  std::vector<SurfacePoint> stops;
  std::vector<SegmentGeom> segments;  // one per consecutive stop pair

  int num_segments() const { return static_cast<int>(segments.size()); }
  // Throws ParameterError when the stop/segment structure is malformed.
  void validate() const;
};

// All segments geodesic. Checks that each geodesic exists on `s`; throws
// BlockedByVertexError when one runs into a vertex.
CutPath straight_path(const Surface& s, const CapLabels& labels, const PathType& t);

// Straight path with the given segments replaced.
CutPath arc_path(const Surface& s, const CapLabels& labels, const PathType& t,
                 const std::vector<std::pair<int, SegmentGeom>>& arcs);

// The arc strategy each lemma uses for a template: acaab bends a2->a3
// around the combined center of a1 and c; caaab bends a2->a3 and a3->a1
// around c; aacab bends a2->c and aaacb bends a2->a3 around a1. The
// indices follow the template's own stop order.
std::vector<std::pair<int, SegmentGeom>> lemma_arcs(const PathType& t);
CutPath lemma_arc_path(const Surface& s, const CapLabels& labels, const PathType& t);

// Relabels a path by the cap rotation a_i -> a_{i+shift}, b_i -> b_{i+shift}.
CutPath rotate_labels(const CutPath& p, const CapLabels& labels, int shift);

nlohmann::json to_json(const SurfacePoint& p, const CapLabels* labels = nullptr);
SurfacePoint surface_point_from_json(const nlohmann::json& j, const CapLabels* labels = nullptr);
nlohmann::json to_json(const CutPath& p, const CapLabels* labels = nullptr);
CutPath cut_path_from_json(const nlohmann::json& j, const CapLabels* labels = nullptr);

}  // namespace capzip
