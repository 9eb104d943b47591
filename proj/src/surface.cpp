#include "capzip/surface.hpp"

#include <algorithm>
#include <cstdio>

#include "capzip/errors.hpp"

namespace capzip {

namespace {

Point3 newell_normal(const std::vector<Point3>& pts) {
  Point3 n;
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point3& a = pts[i];
    const Point3& b = pts[(i + 1) % m];
    n.x += (a.y - b.y) * (a.z + b.z);
    n.y += (a.z - b.z) * (a.x + b.x);
    n.z += (a.x - b.x) * (a.y + b.y);
  }
  return n;
}

}  // namespace

Surface::Surface(std::vector<Point3> vertices, std::vector<std::vector<int>> faces,
                 std::vector<int> tags, double planarity_tol)
    : vertices_(std::move(vertices)), faces_(std::move(faces)), tags_(std::move(tags)) {
  if (tags_.empty()) tags_.assign(faces_.size(), 0);
  if (tags_.size() != faces_.size()) throw GeometryError("face tag count mismatch");
  for (const auto& f : faces_) {
    if (f.size() < 3) throw GeometryError("face with fewer than 3 vertices");
    for (int v : f) {
      if (v < 0 || v >= num_vertices()) throw GeometryError("face references missing vertex");
    }
  }
  build_charts(planarity_tol);
  build_adjacency();
  build_fans();
}

void Surface::build_charts(double planarity_tol) {
  double scale = 0.0;
  for (const auto& p : vertices_) scale = std::max(scale, norm(p));
  scale = std::max(scale, 1.0);
  const std::size_t nf = faces_.size();
  charts_.resize(nf);
  normals_.resize(nf);
  origins_.resize(nf);
  axis_x_.resize(nf);
  axis_y_.resize(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    std::vector<Point3> pts;
    for (int v : faces_[f]) pts.push_back(vertices_[v]);
    Point3 n = newell_normal(pts);
    const double nn = norm(n);
    if (nn <= 1e-14 * scale * scale) throw GeometryError("degenerate face");
    n = n / nn;
    const Point3 o = pts[0];
    Point3 ex = pts[1] - o;
    ex = ex / norm(ex);
    const Point3 ey = cross(n, ex);
    std::vector<Point2> chart;
    for (const auto& p : pts) {
      if (std::abs(dot(p - o, n)) > planarity_tol * scale) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "face %zu is not planar (offset %.3g)", f,
                      std::abs(dot(p - o, n)));
        throw GeometryError(buf);
      }
      chart.push_back({dot(p - o, ex), dot(p - o, ey)});
    }
    const std::size_t m = chart.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Point2 a = chart[i], b = chart[(i + 1) % m], c = chart[(i + 2) % m];
      if (cross(b - a, c - b) <= 0.0) {
        throw GeometryError("face " + std::to_string(f) + " is not strictly convex");
      }
    }
    charts_[f] = std::move(chart);
    normals_[f] = n;
    origins_[f] = o;
    axis_x_[f] = ex;
    axis_y_[f] = ey;
  }
}

void Surface::build_adjacency() {
  const int nf = num_faces();
  twins_.assign(nf, {});
  for (int f = 0; f < nf; ++f) {
    const int m = face_size(f);
    twins_[f].assign(m, EdgeRef{});
    for (int k = 0; k < m; ++k) {
      const int u = faces_[f][k], v = faces_[f][(k + 1) % m];
      if (u == v) throw GeometryError("face with repeated vertex");
      if (!directed_.emplace(std::make_pair(u, v), EdgeRef{f, k}).second) {
        throw GeometryError("non-manifold or inconsistently oriented edge " + std::to_string(u) +
                            "-" + std::to_string(v));
      }
    }
  }
  std::map<int, int> boundary_next;
  for (const auto& [uv, ref] : directed_) {
    auto it = directed_.find({uv.second, uv.first});
    if (it != directed_.end()) {
      twins_[ref.face][ref.k] = it->second;
      if (uv.first < uv.second) edges_.push_back(uv);
    } else {
      edges_.push_back({std::min(uv.first, uv.second), std::max(uv.first, uv.second)});
      if (!boundary_next.emplace(uv.first, uv.second).second) {
        throw GeometryError("boundary is not a union of simple loops");
      }
    }
  }
  std::sort(edges_.begin(), edges_.end());
  boundary_vertex_.assign(num_vertices(), 0);
  for (const auto& [u, v] : boundary_next) boundary_vertex_[u] = 1;
  std::map<int, int> remaining = boundary_next;
  while (!remaining.empty()) {
    std::vector<int> loop;
    int start = remaining.begin()->first;
    int cur = start;
    do {
      auto it = remaining.find(cur);
      if (it == remaining.end()) throw GeometryError("open boundary chain");
      loop.push_back(cur);
      cur = it->second;
      remaining.erase(it);
    } while (cur != start);
    boundary_loops_.push_back(std::move(loop));
  }
}

void Surface::build_fans() {
  const int nv = num_vertices();
  std::vector<std::vector<std::pair<int, int>>> corners(nv);
  for (int f = 0; f < num_faces(); ++f) {
    for (int k = 0; k < face_size(f); ++k) corners[faces_[f][k]].push_back({f, k});
  }
  fans_.assign(nv, {});
  total_angle_.assign(nv, 0.0);
  for (int v = 0; v < nv; ++v) {
    if (corners[v].empty()) throw GeometryError("isolated vertex " + std::to_string(v));
    std::pair<int, int> start = corners[v].front();
    if (boundary_vertex_[v]) {
      // start at the corner whose outgoing edge is on the boundary
      bool found = false;
      for (const auto& [f, k] : corners[v]) {
        if (!twins_[f][k].valid()) {
          start = {f, k};
          found = true;
          break;
        }
      }
      if (!found) throw GeometryError("boundary vertex without boundary corner");
    }
    std::pair<int, int> cur = start;
    double acc = 0.0;
    while (true) {
      const double a = corner_angle(cur.first, cur.second);
      fans_[v].push_back({cur.first, cur.second, a, acc});
      acc += a;
      const int m = face_size(cur.first);
      const EdgeRef back = twins_[cur.first][(cur.second + m - 1) % m];
      if (!back.valid()) break;
      cur = {back.face, back.k};
      if (cur == start) break;
      if (fans_[v].size() > corners[v].size()) break;
    }
    if (fans_[v].size() != corners[v].size()) {
      throw GeometryError("non-manifold vertex " + std::to_string(v));
    }
    total_angle_[v] = acc;
  }
}

std::optional<EdgeRef> Surface::find_edge(int u, int v) const {
  auto it = directed_.find({u, v});
  if (it == directed_.end()) return std::nullopt;
  return it->second;
}

bool Surface::is_boundary_edge(int u, int v) const {
  const auto a = find_edge(u, v);
  const auto b = find_edge(v, u);
  return (a.has_value() != b.has_value());
}

int Surface::corner_of(int f, int v) const {
  const auto& fv = faces_.at(f);
  for (int k = 0; k < static_cast<int>(fv.size()); ++k) {
    if (fv[k] == v) return k;
  }
  return -1;
}

double Surface::corner_angle(int f, int k) const {
  const auto& c = charts_.at(f);
  const int m = static_cast<int>(c.size());
  return angle_between(c[(k + 1) % m], c[k], c[(k + m - 1) % m]);
}

Rigid2 Surface::hinge(int f, int k) const {
  const EdgeRef t = twin(f, k);
  if (!t.valid()) throw GeometryError("hinge across a boundary edge");
  const auto& cf = charts_[f];
  const auto& cg = charts_[t.face];
  const int mf = static_cast<int>(cf.size());
  const int mg = static_cast<int>(cg.size());
  // g's edge runs face[k+1] -> face[k]
  return Rigid2::from_segments(cg[t.k], cg[(t.k + 1) % mg], cf[(k + 1) % mf], cf[k]);
}

Point3 Surface::lift(int f, const Point2& p) const {
  return origins_[f] + axis_x_[f] * p.x + axis_y_[f] * p.y;
}

Point2 Surface::to_chart(int f, const Point3& p) const {
  const Point3 d = p - origins_[f];
  return {dot(d, axis_x_[f]), dot(d, axis_y_[f])};
}

double Surface::fan_coordinate(int v, const TangentDir& d) const {
  for (const auto& c : fans_.at(v)) {
    if (c.face == d.face) return c.start + d.angle;
  }
  throw ParameterError("direction face is not incident to vertex " + std::to_string(v));
}

TangentDir Surface::fan_direction(int v, double theta) const {
  const auto& fan = fans_.at(v);
  const double total = total_angle_[v];
  if (!boundary_vertex_[v]) {
    theta = wrap_positive(theta, total);
  } else if (theta < -1e-12 || theta > total + 1e-12) {
    throw ParameterError("direction outside the fan of boundary vertex " + std::to_string(v));
  }
  for (const auto& c : fan) {
    if (theta <= c.start + c.angle) {
      return {c.face, std::clamp(theta - c.start, 0.0, c.angle)};
    }
  }
  return {fan.back().face, fan.back().angle};
}

Point2 Surface::chart_direction(int v, const TangentDir& d) const {
  const int k = corner_of(d.face, v);
  if (k < 0) throw ParameterError("direction face is not incident to vertex");
  const auto& c = charts_[d.face];
  const int m = static_cast<int>(c.size());
  return unit(angle_of(c[(k + 1) % m] - c[k]) + d.angle);
}

TangentDir Surface::direction_towards(int v, int f, const Point2& p) const {
  const int k = corner_of(f, v);
  if (k < 0) throw ParameterError("face is not incident to vertex");
  const auto& c = charts_[f];
  const int m = static_cast<int>(c.size());
  const Point2 e = c[(k + 1) % m] - c[k];
  const Point2 w = p - c[k];
  double a = std::atan2(cross(e, w), dot(e, w));
  const double limit = corner_angle(f, k);
  // Directions just outside the corner through rounding are clamped back.
  if (a < -1e-6 || a > limit + 1e-6) {
    throw GeometryError("direction does not point into the face corner");
  }
  return {f, std::clamp(a, 0.0, limit)};
}

double Surface::area() const {
  double a = 0.0;
  for (const auto& c : charts_) a += polygon_area(c);
  return a;
}

double vertex_curvature(const Surface& s, int v) {
  if (s.is_boundary_vertex(v)) {
    throw ParameterError("vertex " + std::to_string(v) + " is on the boundary; no curvature");
  }
  return kTwoPi - s.total_angle(v);
}

double total_curvature(const Surface& s) {
  double t = 0.0;
  for (int v = 0; v < s.num_vertices(); ++v) {
    if (!s.is_boundary_vertex(v)) t += vertex_curvature(s, v);
  }
  return t;
}

double boundary_turn(const Surface& s, int v) {
  if (!s.is_boundary_vertex(v)) throw ParameterError("not a boundary vertex");
  return kPi - s.total_angle(v);
}

SurfacePoint SurfacePoint::at_vertex(int id) {
  SurfacePoint p;
  p.kind = Kind::Vertex;
  p.vertex = id;
  return p;
}

SurfacePoint SurfacePoint::on_edge(int u, int v, double t) {
  if (t <= 0.0) return at_vertex(u);
  if (t >= 1.0) return at_vertex(v);
  SurfacePoint p;
  p.kind = Kind::Edge;
  p.u = u;
  p.v = v;
  p.t = t;
  return p;
}

SurfacePoint SurfacePoint::in_face(int f, Point2 local) {
  SurfacePoint p;
  p.kind = Kind::Face;
  p.face = f;
  p.local = local;
  return p;
}

bool SurfacePoint::operator==(const SurfacePoint& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Vertex:
      return vertex == o.vertex;
    case Kind::Edge:
      return (u == o.u && v == o.v && t == o.t) || (u == o.v && v == o.u && t == 1.0 - o.t);
    case Kind::Face:
      return face == o.face && local == o.local;
  }
  return false;
}

Point3 position(const Surface& s, const SurfacePoint& p) {
  switch (p.kind) {
    case SurfacePoint::Kind::Vertex:
      return s.vertex(p.vertex);
    case SurfacePoint::Kind::Edge:
      return lerp(s.vertex(p.u), s.vertex(p.v), p.t);
    case SurfacePoint::Kind::Face:
      return s.lift(p.face, p.local);
  }
  return {};
}

std::vector<std::pair<int, Point2>> locate(const Surface& s, const SurfacePoint& p) {
  std::vector<std::pair<int, Point2>> out;
  switch (p.kind) {
    case SurfacePoint::Kind::Vertex:
      if (p.vertex < 0 || p.vertex >= s.num_vertices()) throw ParameterError("no such vertex");
      for (const auto& c : s.fan(p.vertex)) out.push_back({c.face, s.chart(c.face)[c.corner]});
      break;
    case SurfacePoint::Kind::Edge: {
      const auto a = s.find_edge(p.u, p.v);
      const auto b = s.find_edge(p.v, p.u);
      if (!a && !b) throw ParameterError("no edge between the given vertices");
      for (const auto& r : {a, b}) {
        if (!r) continue;
        const auto& c = s.chart(r->face);
        const Point2 pu = c[s.corner_of(r->face, p.u)];
        const Point2 pv = c[s.corner_of(r->face, p.v)];
        out.push_back({r->face, lerp(pu, pv, p.t)});
      }
      break;
    }
    case SurfacePoint::Kind::Face:
      if (p.face < 0 || p.face >= s.num_faces()) throw ParameterError("no such face");
      out.push_back({p.face, p.local});
      break;
  }
  return out;
}

bool is_on_boundary(const Surface& s, const SurfacePoint& p) {
  switch (p.kind) {
    case SurfacePoint::Kind::Vertex:
      return s.is_boundary_vertex(p.vertex);
    case SurfacePoint::Kind::Edge:
      return s.is_boundary_edge(p.u, p.v);
    case SurfacePoint::Kind::Face:
      return false;
  }
  return false;
}

std::string describe(const SurfacePoint& p) {
  char buf[96];
  switch (p.kind) {
    case SurfacePoint::Kind::Vertex:
      std::snprintf(buf, sizeof buf, "vertex %d", p.vertex);
      break;
    case SurfacePoint::Kind::Edge:
      std::snprintf(buf, sizeof buf, "edge %d-%d at t=%.6f", p.u, p.v, p.t);
      break;
    case SurfacePoint::Kind::Face:
      std::snprintf(buf, sizeof buf, "face %d at (%.6f, %.6f)", p.face, p.local.x, p.local.y);
      break;
  }
  return buf;
}

AngleSplit incident_angle_split(const Surface& s, int v, const TangentDir& back,
                                const TangentDir& forward) {
  if (s.is_boundary_vertex(v)) throw ParameterError("angle split needs an interior vertex");
  const double total = s.total_angle(v);
  const double tb = s.fan_coordinate(v, back);
  const double tf = s.fan_coordinate(v, forward);
  AngleSplit out;
  out.rho = wrap_positive(tf - tb, total);
  out.lambda = total - out.rho;
  out.omega = kTwoPi - total;
  return out;
}

}  // namespace capzip
