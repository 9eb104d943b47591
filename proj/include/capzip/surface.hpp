#pragma once

// Polyhedral surface with per-face planar charts and incident-angle fans.
//
// Faces are convex planar polygons listed CCW as seen from outside. Each
// face carries a chart: its vertices expressed in a 2D frame in the face
// plane (vertex 0 at the origin, edge 0 along +x). Going CCW around a
// vertex (from outside) visits its corners in fan order.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "capzip/geom.hpp"

namespace capzip {

// Face tag used for the flat skirt faces that extend a cap past its boundary.
inline constexpr int kExtensionTag = 1;

struct EdgeRef {
  int face = -1;
  int k = -1;  // edge k runs from face[k] to face[k+1]
  bool valid() const { return face >= 0; }
};

struct FanCorner {
  int face = -1;
  int corner = -1;     // index of the vertex inside the face
  double angle = 0.0;  // interior angle of the face at this corner
  double start = 0.0;  // fan coordinate where this corner begins
};

// A tangent direction at a vertex: a face incident to the vertex and the
// CCW angle measured from that face's outgoing edge (vertex -> next).
struct TangentDir {
  int face = -1;
  double angle = 0.0;
};

class Surface {
 public:
  Surface() = default;
  Surface(std::vector<Point3> vertices, std::vector<std::vector<int>> faces,
          std::vector<int> tags = {}, double planarity_tol = 1e-8);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Point3>& vertices() const { return vertices_; }
  const Point3& vertex(int v) const { return vertices_.at(v); }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<int>& face(int f) const { return faces_.at(f); }
  int face_size(int f) const { return static_cast<int>(faces_.at(f).size()); }
  int tag(int f) const { return tags_.at(f); }
  const std::vector<Point2>& chart(int f) const { return charts_.at(f); }
  Point3 normal(int f) const { return normals_.at(f); }

  // Twin of edge k of face f, or an invalid ref on the boundary.
  EdgeRef twin(int f, int k) const { return twins_.at(f).at(k); }
  // The face edge running u -> v, if any.
  std::optional<EdgeRef> find_edge(int u, int v) const;
  // Undirected edges (u < v), sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool is_boundary_edge(int u, int v) const;

  bool is_closed() const { return boundary_loops_.empty(); }
  bool is_boundary_vertex(int v) const { return boundary_vertex_.at(v); }
  const std::vector<std::vector<int>>& boundary_loops() const { return boundary_loops_; }
  int euler_characteristic() const { return num_vertices() - num_edges() + num_faces(); }

  const std::vector<FanCorner>& fan(int v) const { return fans_.at(v); }
  double total_angle(int v) const { return total_angle_.at(v); }
  // Index of v within face f, or -1.
  int corner_of(int f, int v) const;
  double corner_angle(int f, int k) const;

  // Rigid map from the chart of twin(f, k).face onto the chart of f.
  Rigid2 hinge(int f, int k) const;
  Point3 lift(int f, const Point2& local) const;
  Point2 to_chart(int f, const Point3& p) const;

  // Fan coordinate in [0, total_angle(v)] of a tangent direction.
  double fan_coordinate(int v, const TangentDir& d) const;
  // Inverse of fan_coordinate. Interior vertices wrap theta modulo the
  // total angle; boundary vertices throw ParameterError outside the fan.
  TangentDir fan_direction(int v, double theta) const;
  // Unit vector in the chart of d.face for a direction at vertex v.
  Point2 chart_direction(int v, const TangentDir& d) const;
  // Direction at v pointing at chart point p of face f (v must be a corner).
  TangentDir direction_towards(int v, int f, const Point2& p) const;

  double area() const;

 private:
  void build_charts(double planarity_tol);
  void build_adjacency();
  void build_fans();

  std::vector<Point3> vertices_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> tags_;
  std::vector<std::vector<Point2>> charts_;
  std::vector<Point3> normals_;
  std::vector<Point3> origins_;
  std::vector<Point3> axis_x_;
  std::vector<Point3> axis_y_;
  std::vector<std::vector<EdgeRef>> twins_;
  std::map<std::pair<int, int>, EdgeRef> directed_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> boundary_loops_;
  std::vector<char> boundary_vertex_;
  std::vector<std::vector<FanCorner>> fans_;
  std::vector<double> total_angle_;
};

// 2*pi minus the total incident face angle. Throws ParameterError on a
// boundary vertex.
double vertex_curvature(const Surface& s, int v);

// Sum of interior-vertex curvatures.
double total_curvature(const Surface& s);

// Turning of the boundary at a boundary vertex: pi minus its fan angle.
double boundary_turn(const Surface& s, int v);

struct SurfacePoint {
  enum class Kind { Vertex, Edge, Face };
  Kind kind = Kind::Vertex;
  int vertex = -1;     // Vertex
  int u = -1, v = -1;  // Edge: the point lerp(u, v, t)
  double t = 0.0;
  int face = -1;  // Face: chart coordinates in `local`
  Point2 local{};

  static SurfacePoint at_vertex(int id);
  // Parameters at the ends collapse to the vertex.
  static SurfacePoint on_edge(int u, int v, double t);
  static SurfacePoint in_face(int f, Point2 local);

  bool operator==(const SurfacePoint& o) const;
};

Point3 position(const Surface& s, const SurfacePoint& p);
// Faces containing p together with p's chart coordinates in each.
std::vector<std::pair<int, Point2>> locate(const Surface& s, const SurfacePoint& p);
bool is_on_boundary(const Surface& s, const SurfacePoint& p);
std::string describe(const SurfacePoint& p);

struct AngleSplit {
  double rho = 0.0;     // right side
  double lambda = 0.0;  // left side
  double omega = 0.0;
};

// Split of the incident angle at interior vertex v by a path arriving from
// `back` (a direction pointing back along the incoming path) and leaving
// along `forward`. rho is the fan sweep on the traveller's right.
AngleSplit incident_angle_split(const Surface& s, int v, const TangentDir& back,
                                const TangentDir& forward);

}  // namespace capzip
