#pragma once

// Straight segments on a polyhedral surface: shortest straight unfoldings
// over short face strips, and tracing of planar polylines across faces.

#include <vector>

#include "capzip/surface.hpp"

namespace capzip {

struct GeodesicSegment {
  SurfacePoint from;
  SurfacePoint to;
  std::vector<int> faces;          // strip, first face contains `from`
  std::vector<Point3> crossings;   // one per shared edge, in order
  std::vector<Point2> unfolded;    // from, crossings..., to in the chart of faces[0]
  double length = 0.0;
  // Departure direction when `from` is a vertex (face == -1 otherwise).
  TangentDir start_dir;
};

struct GeodesicOptions {
  int max_faces = 4;
  Tolerance tol{};
};

// Shortest straight-in-development segment between p and q over face strips
// of at most `max_faces` faces. Throws BlockedByVertexError when every
// candidate strip fails because the segment would run through a vertex.
GeodesicSegment geodesic_between(const Surface& s, const SurfacePoint& p, const SurfacePoint& q,
                                 const GeodesicOptions& opt = {});

// Where a traced polyline crosses into or leaves a face.
struct BoundaryLoc {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  int corner = -1;  // Vertex: index within the face
  int k = -1;       // Edge: face edge index
  double t = 0.0;   // Edge: parameter along the edge
};

// The part of a traced curve inside one face, in that face's chart.
struct FacePass {
  int face = -1;
  int segment = -1;  // which path segment produced it
  std::vector<Point2> pts;
  BoundaryLoc entry;
  BoundaryLoc exit;
  // Set when all points lie on one face edge (the curve runs along it).
  int along_edge = -1;
};

struct TracedCurve {
  std::vector<FacePass> passes;
  std::vector<Point3> points;  // 3D polyline including every edge crossing
  std::vector<int> point_faces;
  TangentDir departure;        // at the start vertex
  TangentDir arrival_back;     // at the end vertex, pointing back along the curve
  bool ends_at_vertex = false;
  double length = 0.0;
};

struct TraceOptions {
  Tolerance tol{};
  double snap = 1e-7;  // distance at which the end is snapped to the target
};

// Trace the planar polyline `pts` (pts[0] = origin, the frame's +x axis
// aligned with fan coordinate `theta_ref` at `start`) across the surface,
// finishing at `target`. Throws BlockedByVertexError when the curve runs
// into a vertex and LeavesSurfaceError when it crosses the boundary.
TracedCurve trace_polyline(const Surface& s, int start, double theta_ref,
                           const std::vector<Point2>& pts, const SurfacePoint& target,
                           int segment_index = -1, const TraceOptions& opt = {});

}  // namespace capzip
