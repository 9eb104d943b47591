#include "capzip/geodesic.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>

#include "capzip/errors.hpp"

namespace capzip {

namespace {

struct StripEdge {
  int face;  // face on the near side
  int k;     // its edge index
  Point2 a;  // edge endpoints in the root chart
  Point2 b;
  int va;
  int vb;
};

struct Candidate {
  std::vector<int> faces;
  std::vector<StripEdge> edges;
  Point2 p;
  Point2 q;
};

struct StripSearch {
  const Surface& s;
  const GeodesicOptions& opt;
  int p_vertex;
  int q_vertex;
  std::map<int, Point2> q_in_face;
  std::vector<Candidate> found;

  void dfs(std::vector<int>& faces, std::vector<StripEdge>& edges, const Rigid2& to_root,
           const Point2& p_root) {
    const int f = faces.back();
    auto it = q_in_face.find(f);
    if (it != q_in_face.end()) found.push_back({faces, edges, p_root, to_root.apply(it->second)});
    if (static_cast<int>(faces.size()) >= opt.max_faces) return;
    const int m = s.face_size(f);
    for (int k = 0; k < m; ++k) {
      const EdgeRef t = s.twin(f, k);
      if (!t.valid()) continue;
      if (std::find(faces.begin(), faces.end(), t.face) != faces.end()) continue;
      const auto& c = s.chart(f);
      StripEdge e{f, k, to_root.apply(c[k]), to_root.apply(c[(k + 1) % m]), s.face(f)[k],
                  s.face(f)[(k + 1) % m]};
      const Rigid2 next = to_root * s.hinge(f, k);
      faces.push_back(t.face);
      edges.push_back(e);
      dfs(faces, edges, next, p_root);
      faces.pop_back();
      edges.pop_back();
    }
  }
};

// Checks the straight chord of a strip. Returns true when valid; otherwise
// reports the nearest edge endpoint and by how much the chord missed it.
bool check_chord(const Candidate& c, const Tolerance& tol, std::vector<double>& params,
                 int& block_vertex, double& miss, int p_vertex, int q_vertex) {
  const Point2 d = c.q - c.p;
  const double len = norm(d);
  block_vertex = -1;
  miss = std::numeric_limits<double>::infinity();
  if (len <= tol.eps_len) return false;
  params.clear();
  double last_s = 0.0;
  for (const auto& e : c.edges) {
    const Point2 ev = e.b - e.a;
    const double el = norm(ev);
    const double den = cross(d, ev);
    if (std::abs(den) <= tol.eps_ang * len * el) return false;
    const double s = cross(e.a - c.p, ev) / den;
    const double u = cross(e.a - c.p, d) / den;
    const double near_end = u < 0.5 ? 0.0 : 1.0;
    const int v = u < 0.5 ? e.va : e.vb;
    const double off = std::abs(u - near_end) * el;
    if (u * el <= tol.eps_len || (1.0 - u) * el <= tol.eps_len) {
      // Through an edge endpoint: a block unless it is one of the chord's own ends.
      if (v != p_vertex && v != q_vertex) {
        block_vertex = v;
        miss = 0.0;
      }
      return false;
    }
    if (u < 0.0 || u > 1.0) {
      if (v != p_vertex && v != q_vertex) {
        block_vertex = v;
        miss = off;
      }
      return false;
    }
    if (s < last_s - 1e-12 || s > 1.0 + 1e-12) return false;
    last_s = s;
    params.push_back(u);
  }
  return true;
}

bool inside_convex(const std::vector<Point2>& poly, const Point2& q, double tol) {
  const std::size_t m = poly.size();
  for (std::size_t j = 0; j < m; ++j) {
    const Point2 a = poly[j], b = poly[(j + 1) % m];
    const Point2 e = b - a;
    if (cross(e, q - a) / norm(e) < -tol) return false;
  }
  return true;
}

void mark_along_edge(const Surface& s, FacePass& pass, double tol) {
  const auto& c = s.chart(pass.face);
  const int m = static_cast<int>(c.size());
  for (int j = 0; j < m; ++j) {
    bool all = true;
    for (const auto& p : pass.pts) {
      if (distance_to_segment(p, c[j], c[(j + 1) % m]) > tol) {
        all = false;
        break;
      }
    }
    if (all && pass.pts.size() >= 2) {
      pass.along_edge = j;
      return;
    }
  }
}

}  // namespace

GeodesicSegment geodesic_between(const Surface& s, const SurfacePoint& p, const SurfacePoint& q,
                                 const GeodesicOptions& opt) {
  if (p == q) throw ParameterError("geodesic endpoints coincide");
  if (opt.max_faces < 1) throw ParameterError("max_faces must be positive");
  const auto starts = locate(s, p);
  const auto ends = locate(s, q);
  StripSearch search{s, opt, p.kind == SurfacePoint::Kind::Vertex ? p.vertex : -1,
                     q.kind == SurfacePoint::Kind::Vertex ? q.vertex : -1, {}, {}};
  for (const auto& [f, pt] : ends) search.q_in_face[f] = pt;
  for (const auto& [f, pt] : starts) {
    std::vector<int> faces{f};
    std::vector<StripEdge> edges;
    search.dfs(faces, edges, Rigid2(), pt);
  }
  if (search.found.empty()) {
    throw GeometryError("no face strip of at most " + std::to_string(opt.max_faces) +
                        " faces joins " + describe(p) + " and " + describe(q));
  }
  const Candidate* best = nullptr;
  std::vector<double> best_params, params;
  double best_len = std::numeric_limits<double>::infinity();
  int block_vertex = -1;
  double block_miss = std::numeric_limits<double>::infinity();
  for (const auto& c : search.found) {
    int bv;
    double miss;
    if (check_chord(c, opt.tol, params, bv, miss, search.p_vertex, search.q_vertex)) {
      const double len = distance(c.p, c.q);
      if (len < best_len - 1e-12) {
        best_len = len;
        best = &c;
        best_params = params;
      }
    } else if (bv >= 0 && miss < block_miss) {
      block_miss = miss;
      block_vertex = bv;
    }
  }
  if (!best) {
    if (block_vertex >= 0) {
      throw BlockedByVertexError(block_vertex, "straight segment from " + describe(p) + " to " +
                                                   describe(q) + " is blocked by vertex " +
                                                   std::to_string(block_vertex));
    }
    throw GeometryError("no straight development between " + describe(p) + " and " +
                        describe(q));
  }
  GeodesicSegment g;
  g.from = p;
  g.to = q;
  g.faces = best->faces;
  g.length = best_len;
  g.unfolded.push_back(best->p);
  for (std::size_t i = 0; i < best->edges.size(); ++i) {
    const auto& e = best->edges[i];
    const double u = best_params[i];
    g.crossings.push_back(lerp(s.vertex(e.va), s.vertex(e.vb), u));
    g.unfolded.push_back(lerp(e.a, e.b, u));
  }
  g.unfolded.push_back(best->q);
  if (p.kind == SurfacePoint::Kind::Vertex) {
    g.start_dir = s.direction_towards(p.vertex, best->faces.front(), best->q);
  }
  return g;
}

TracedCurve trace_polyline(const Surface& s, int start, double theta_ref,
                           const std::vector<Point2>& pts, const SurfacePoint& target,
                           int segment_index, const TraceOptions& opt) {
  if (pts.size() < 2) throw ParameterError("polyline needs at least two points");
  if (norm(pts[0]) > opt.tol.eps_len) throw ParameterError("polyline must start at the origin");
  if (target.kind == SurfacePoint::Kind::Face) {
    throw ParameterError("trace target must be a vertex or an edge point");
  }
  const double eps = opt.tol.eps_len;
  TracedCurve out;
  std::size_t first = 1;
  while (first < pts.size() && distance(pts[first], pts[0]) <= eps) ++first;
  if (first == pts.size()) throw ParameterError("polyline has zero length");
  const double alpha0 = angle_of(pts[first] - pts[0]);
  out.departure = s.fan_direction(start, theta_ref + alpha0);
  int f = out.departure.face;
  const int k0 = s.corner_of(f, start);
  const Point2 p0 = s.chart(f)[k0];
  const Point2 dir = s.chart_direction(start, out.departure);
  const double rot = angle_of(dir) - alpha0;
  Rigid2 frame(rot, {});
  frame = Rigid2(rot, p0 - frame.apply_vector(pts[0]));

  FacePass pass;
  pass.face = f;
  pass.segment = segment_index;
  pass.entry = {BoundaryLoc::Kind::Vertex, k0, -1, 0.0};
  pass.pts.push_back(p0);
  out.points.push_back(s.vertex(start));
  out.point_faces.push_back(f);

  auto finish_pass = [&](FacePass& fp) {
    mark_along_edge(s, fp, eps);
    out.passes.push_back(fp);
  };

  Point2 last_dir = dir;
  for (std::size_t i = first - 1; i + 1 < pts.size(); ++i) {
    if (distance(pts[i], pts[i + 1]) <= eps) continue;
    out.length += distance(pts[i], pts[i + 1]);
    int guard = 0;
    while (true) {
      if (++guard > 10000) throw GeometryError("trace does not terminate");
      const auto& c = s.chart(f);
      const Point2 p = pass.pts.back();
      const Point2 q = frame.apply(pts[i + 1]);
      const Point2 d = q - p;
      if (norm(d) > eps) last_dir = d / norm(d);
      if (inside_convex(c, q, eps)) {
        if (distance(q, p) > eps) {
          pass.pts.push_back(q);
          out.points.push_back(s.lift(f, q));
          out.point_faces.push_back(f);
        }
        break;
      }
      const int m = static_cast<int>(c.size());
      double best_s = std::numeric_limits<double>::infinity();
      int best_j = -1;
      for (int j = 0; j < m; ++j) {
        const Point2 a = c[j];
        const Point2 e = c[(j + 1) % m] - a;
        const double den = cross(e, d);
        if (den >= -1e-14 * norm(e) * norm(d)) continue;
        const double sj = -cross(e, p - a) / den;
        if (sj < best_s) {
          best_s = sj;
          best_j = j;
        }
      }
      if (best_j < 0) throw GeometryError("trace failed to find an exit edge");
      best_s = std::clamp(best_s, 0.0, 1.0);
      const Point2 a = c[best_j];
      const Point2 b = c[(best_j + 1) % m];
      const Point2 x = p + d * best_s;
      const double el = distance(a, b);
      double t = std::clamp(dot(x - a, b - a) / (el * el), 0.0, 1.0);
      if (t * el <= eps || (1.0 - t) * el <= eps) {
        const int w = s.face(f)[t * el <= eps ? best_j : (best_j + 1) % m];
        throw BlockedByVertexError(w, "traced curve runs into vertex " + std::to_string(w));
      }
      const Point2 xe = lerp(a, b, t);
      if (distance(xe, p) > eps) {
        pass.pts.push_back(xe);
        out.points.push_back(s.lift(f, xe));
        out.point_faces.push_back(f);
      }
      pass.exit = {BoundaryLoc::Kind::Edge, -1, best_j, t};
      const EdgeRef tw = s.twin(f, best_j);
      if (!tw.valid()) {
        const Point3 where = s.lift(f, xe);
        char buf[128];
        std::snprintf(buf, sizeof buf, "traced curve leaves the surface at (%.6f, %.6f, %.6f)",
                      where.x, where.y, where.z);
        throw LeavesSurfaceError(where, buf);
      }
      finish_pass(pass);
      const Rigid2 h = s.hinge(tw.face, tw.k);
      frame = h * frame;
      f = tw.face;
      pass = FacePass{};
      pass.face = f;
      pass.segment = segment_index;
      pass.entry = {BoundaryLoc::Kind::Edge, -1, tw.k, 1.0 - t};
      const auto& cg = s.chart(f);
      const int mg = static_cast<int>(cg.size());
      pass.pts.push_back(lerp(cg[tw.k], cg[(tw.k + 1) % mg], 1.0 - t));
    }
  }

  // Snap the end onto the target.
  const Point2 end = pass.pts.back();
  Point2 loc{};
  bool hit = false;
  for (const auto& [face, lp] : locate(s, target)) {
    if (face == f && distance(lp, end) <= opt.snap) {
      loc = lp;
      hit = true;
    }
  }
  if (!hit) {
    const Point3 e3 = s.lift(f, end);
    const double miss = distance(e3, position(s, target));
    char buf[160];
    std::snprintf(buf, sizeof buf, "traced curve ends %.3g away from its target %s", miss,
                  describe(target).c_str());
    throw GeometryError(buf);
  }
  pass.pts.back() = loc;
  out.points.back() = position(s, target);
  if (target.kind == SurfacePoint::Kind::Vertex) {
    pass.exit = {BoundaryLoc::Kind::Vertex, s.corner_of(f, target.vertex), -1, 0.0};
    out.ends_at_vertex = true;
    out.arrival_back = s.direction_towards(target.vertex, f, loc - last_dir);
  } else {
    const auto e = s.find_edge(target.u, target.v);
    const auto er = s.find_edge(target.v, target.u);
    if (e && e->face == f) {
      pass.exit = {BoundaryLoc::Kind::Edge, -1, e->k, target.t};
    } else if (er && er->face == f) {
      pass.exit = {BoundaryLoc::Kind::Edge, -1, er->k, 1.0 - target.t};
    }
  }
  if (pass.pts.size() >= 2) finish_pass(pass);
  return out;
}

}  // namespace capzip
