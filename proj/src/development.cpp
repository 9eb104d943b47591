#include "capzip/development.hpp"

#include <algorithm>

#include "capzip/errors.hpp"

namespace capzip {

int PlanarChain::segment_of_leg(int leg) const {
  if (leg < 0 || leg >= num_legs()) throw ParameterError("leg index out of range");
  const auto it = std::upper_bound(segment_start.begin(), segment_start.end(), leg);
  return static_cast<int>(it - segment_start.begin()) - 1;
}

std::vector<Point3> Development::trace_points() const {
  std::vector<Point3> out;
  for (const auto& seg : segments) {
    for (std::size_t i = 0; i < seg.trace.points.size(); ++i) {
      if (i == 0 && !out.empty()) continue;
      out.push_back(seg.trace.points[i]);
    }
  }
  return out;
}

namespace {

double first_leg_angle(const std::vector<Point2>& pts) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (distance(pts[i], pts[0]) > 1e-12) return angle_of(pts[i] - pts[0]);
  }
  throw GeometryError("segment has zero length");
}

double last_leg_angle(const std::vector<Point2>& pts) {
  const Point2 end = pts.back();
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    if (distance(pts[i], end) > 1e-12) return angle_of(end - pts[i]);
  }
  throw GeometryError("segment has zero length");
}

double curvature_at(const Surface& s, const SurfacePoint& p) {
  if (p.kind != SurfacePoint::Kind::Vertex || s.is_boundary_vertex(p.vertex)) {
    throw ParameterError("a combined arc center needs interior vertex stops");
  }
  return kTwoPi - s.total_angle(p.vertex);
}

std::vector<Point2> arc_frame(const SegmentGeom& g, const Point2& center, const Point2& p0,
                              double heading, double length) {
  const Rigid2 to_plane(heading, p0);
  const Point2 p1 = to_plane.apply({length, 0.0});
  const double r0 = distance(p0, center), r1 = distance(p1, center);
  if (r0 < 1e-9 || r1 < 1e-9) throw ParameterError("arc center coincides with an arc endpoint");
  const double phi0 = angle_of(p0 - center);
  const double phi1 = angle_of(p1 - center);
  double sweep = normalize_angle(phi1 - phi0);
  if (g.sweep == ArcSweep::Ccw && sweep < 0) sweep += kTwoPi;
  if (g.sweep == ArcSweep::Cw && sweep > 0) sweep -= kTwoPi;
  const Rigid2 to_frame = to_plane.inverse();
  std::vector<Point2> pts;
  const int n = g.samples;
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    const double smooth = t * t * (3.0 - 2.0 * t);
    const double r = r0 + (r1 - r0) * smooth;
    pts.push_back(to_frame.apply(center + unit(phi0 + sweep * t) * r));
  }
  pts.front() = {0.0, 0.0};
  pts.back() = {length, 0.0};
  return pts;
}

struct Probe {
  int region = -1;
  Rigid2 to_region;  // pass face chart -> region face chart
};

Probe probe_side(const Surface& s, const Layout& L, int face, const Point2& at,
                 const Point2& dir, bool right, double offset) {
  const Point2 n = right ? Point2{dir.y, -dir.x} : perp(dir);
  const Point2 q = at + n * offset;
  const auto& c = s.chart(face);
  const int m = static_cast<int>(c.size());
  int worst = -1;
  double worst_v = 0.0;
  for (int k = 0; k < m; ++k) {
    const Point2 e = c[(k + 1) % m] - c[k];
    const double v = cross(e, q - c[k]) / norm(e);
    if (v < worst_v) {
      worst_v = v;
      worst = k;
    }
  }
  Probe out;
  if (worst < 0) {
    out.region = L.region_at(face, q);
    return out;
  }
  const EdgeRef tw = s.twin(face, worst);
  if (!tw.valid()) return out;
  out.to_region = s.hinge(face, worst).inverse();
  out.region = L.region_at(tw.face, out.to_region.apply(q));
  return out;
}

// Probe on one side of a pass near its start (at_end = false) or end.
Probe probe_pass(const Surface& s, const Layout& L, const FacePass& p, bool at_end, bool right,
                 Point2& vertex_chart) {
  const auto& pts = p.pts;
  Point2 a, b;
  if (!at_end) {
    a = pts[0];
    std::size_t i = 1;
    while (i + 1 < pts.size() && distance(pts[i], a) < 1e-12) ++i;
    b = pts[i];
  } else {
    a = pts.back();
    std::size_t i = pts.size() - 2;
    while (i > 0 && distance(pts[i], a) < 1e-12) --i;
    b = pts[i];
  }
  vertex_chart = a;
  const double len = distance(a, b);
  const Point2 d = (b - a) / len;
  const double step = std::min(1e-5, 0.25 * len);
  const Point2 at = a + d * step;
  // travelling direction: d at the start, -d at the end
  const Point2 travel = at_end ? -d : d;
  return probe_side(s, L, p.face, at, travel, right, step * 1e-2);
}

const FacePass* first_real_pass(const TracedCurve& t) {
  for (const auto& p : t.passes) {
    if (p.pts.size() >= 2) return &p;
  }
  return nullptr;
}

const FacePass* last_real_pass(const TracedCurve& t) {
  for (auto it = t.passes.rbegin(); it != t.passes.rend(); ++it) {
    if (it->pts.size() >= 2) return &*it;
  }
  return nullptr;
}

void add_layout(Development& d, const DevelopOptions& opt) {
  const Surface& s = d.surface;
  std::vector<FacePass> passes;
  for (const auto& seg : d.segments) {
    passes.insert(passes.end(), seg.trace.passes.begin(), seg.trace.passes.end());
  }
  d.layout = build_layout(s, passes, opt.layout);
  d.has_layout = true;
  const int nstops = static_cast<int>(d.segments.size()) + 1;
  d.layout_r.assign(nstops, std::nullopt);
  d.layout_l.assign(nstops, std::nullopt);

  const auto& seg0 = d.segments.front();
  const FacePass* p0 = first_real_pass(seg0.trace);
  if (!p0) return;
  Point2 vchart;
  const Probe root = probe_pass(s, d.layout, *p0, false, true, vchart);
  if (root.region < 0) return;
  // The chord direction in the departure face, pinned to +x.
  const TangentDir dep = seg0.trace.departure;
  const double alpha0 = first_leg_angle(seg0.frame);
  const Point2 chord_dir = rotate(s.chart_direction(d.segments.front().geodesic.from.vertex, dep),
                                  -alpha0);
  // Departure face and the first pass face agree.
  place_from(s, d.layout, root.region, root.to_region.apply(vchart),
             root.to_region.apply_vector(chord_dir), opt.layout);

  auto image = [&](const Probe& pr, const Point2& vc) -> std::optional<Point2> {
    if (pr.region < 0) return std::nullopt;
    const auto& r = d.layout.regions[pr.region];
    if (!r.placed) return std::nullopt;
    return r.place.apply(pr.to_region.apply(vc));
  };
  d.layout_r[0] = image(root, vchart);
  d.layout_l[0] = image(probe_pass(s, d.layout, *p0, false, false, vchart), vchart);
  for (int k = 0; k < static_cast<int>(d.segments.size()); ++k) {
    const FacePass* pe = last_real_pass(d.segments[k].trace);
    if (!pe) continue;
    const Probe r = probe_pass(s, d.layout, *pe, true, true, vchart);
    d.layout_r[k + 1] = image(r, vchart);
    const Probe l = probe_pass(s, d.layout, *pe, true, false, vchart);
    d.layout_l[k + 1] = image(l, vchart);
  }
}

}  // namespace

Development develop_cut(const Surface& s, const CutPath& path, const DevelopOptions& opt) {
  path.validate();
  Development d;
  d.name = path.name;
  d.surface = s;
  const int nseg = path.num_segments();
  double h_r = 0.0, h_l = 0.0;
  Point2 v_r{}, v_l{};
  for (int k = 0; k < nseg; ++k) {
    const SurfacePoint& from = path.stops[k];
    const int v = from.vertex;
    if (s.is_boundary_vertex(v)) {
      throw ParameterError("cut path stop " + describe(from) + " lies on the boundary");
    }
    DevelopedSegment seg;
    seg.kind = path.segments[k].kind;
    seg.geodesic = geodesic_between(s, from, path.stops[k + 1], opt.geodesic);
    const double len = seg.geodesic.length;
    seg.theta_ref = s.fan_coordinate(v, seg.geodesic.start_dir);
    const double total = s.total_angle(v);
    const double omega = kTwoPi - total;

    ChainMark mark;
    mark.stop = k;
    mark.omega = omega;
    double rho_star = 0.0;
    if (k == 0) {
      h_r = 0.0;
      h_l = omega;
      mark.rho = total;
      mark.lambda = 0.0;
    } else {
      const DevelopedSegment& prev = d.segments.back();
      const double back = s.fan_coordinate(v, prev.trace.arrival_back);
      rho_star = wrap_positive(seg.theta_ref - back, total);
      const double last = last_leg_angle(prev.frame);
      h_r = h_r + last + kPi + rho_star;
      h_l = h_l + last + kPi - total + rho_star;
    }

    switch (seg.kind) {
      case SegmentGeom::Kind::Geodesic:
        seg.frame = {{0.0, 0.0}, {len, 0.0}};
        break;
      case SegmentGeom::Kind::Polyline:
        for (const auto& p : path.segments[k].points) seg.frame.push_back(p * len);
        break;
      case SegmentGeom::Kind::Arc: {
        const ArcCenter& c = path.segments[k].center;
        Point2 center;
        if (c.kind == ArcCenter::Kind::StopImage) {
          center = c.i == k ? v_r : d.R.image(c.i);
        } else {
          const Point2 pi = c.i == k ? v_r : d.R.image(c.i);
          const Point2 pj = c.j == k ? v_r : d.R.image(c.j);
          const double wi = curvature_at(s, path.stops[c.i]);
          const double wj = curvature_at(s, path.stops[c.j]);
          if (std::abs(wi + wj) < 1e-15) throw ParameterError("combined center weights cancel");
          center = (pi * wi + pj * wj) / (wi + wj);
        }
        seg.frame = arc_frame(path.segments[k], center, v_r, h_r, len);
        break;
      }
    }

    const double alpha0 = first_leg_angle(seg.frame);
    if (k > 0) {
      mark.rho = rho_star + alpha0;
      if (mark.rho <= 0.0 || mark.rho >= total) {
        throw GeometryError("segment " + std::to_string(k) + " departs " + describe(from) +
                            " outside its incident angle");
      }
      mark.lambda = total - mark.rho;
    }
    seg.trace = trace_polyline(s, v, seg.theta_ref, seg.frame, path.stops[k + 1], k, opt.trace);

    seg.place_r = Rigid2(h_r, v_r);
    seg.place_l = Rigid2(h_l, v_l);
    mark.point = static_cast<int>(d.R.points.size()) - (k == 0 ? 0 : 1);
    if (k == 0) {
      d.R.points.push_back(v_r);
      d.L.points.push_back(v_l);
    }
    d.R.segment_start.push_back(mark.point);
    d.L.segment_start.push_back(mark.point);
    d.R.marks.push_back(mark);
    d.L.marks.push_back(mark);
    for (std::size_t i = 1; i < seg.frame.size(); ++i) {
      d.R.points.push_back(seg.place_r.apply(seg.frame[i]));
      d.L.points.push_back(seg.place_l.apply(seg.frame[i]));
    }
    v_r = d.R.points.back();
    v_l = d.L.points.back();
    d.segments.push_back(std::move(seg));
  }
  ChainMark exit;
  exit.stop = nseg;
  exit.point = static_cast<int>(d.R.points.size()) - 1;
  exit.interior = false;
  const SurfacePoint& last = path.stops.back();
  if (last.kind == SurfacePoint::Kind::Vertex && !s.is_boundary_vertex(last.vertex)) {
    exit.interior = true;
    exit.omega = kTwoPi - s.total_angle(last.vertex);
  }
  d.R.marks.push_back(exit);
  d.L.marks.push_back(exit);

  if (opt.build_layout) add_layout(d, opt);
  return d;
}

Development develop_on_cap(const Cap& cap, const CutPath& path, const DevelopOptions& opt) {
  try {
    return develop_cut(cap.surface, path, opt);
  } catch (const LeavesSurfaceError&) {
    Development d = develop_cut(extend_with_skirts(cap), path, opt);
    d.extended = true;
    return d;
  }
}

OverlapReport chains_cross(const Development& d, const Tolerance& tol) {
  OverlapReport rep;
  const auto& R = d.R.points;
  const auto& L = d.L.points;
  std::vector<Box2> lb;
  for (std::size_t j = 0; j + 1 < L.size(); ++j) {
    Box2 b;
    b.expand(L[j]);
    b.expand(L[j + 1]);
    lb.push_back(b);
  }
  for (std::size_t i = 0; i + 1 < R.size(); ++i) {
    if (distance(R[i], R[i + 1]) <= tol.eps_len) continue;
    Box2 rb;
    rb.expand(R[i]);
    rb.expand(R[i + 1]);
    for (std::size_t j = 0; j + 1 < L.size(); ++j) {
      if (!rb.overlaps(lb[j], tol.eps_len)) continue;
      if (distance(L[j], L[j + 1]) <= tol.eps_len) continue;
      if (i == j && distance(R[i], L[j]) <= tol.eps_len &&
          distance(R[i + 1], L[j + 1]) <= tol.eps_len) {
        continue;
      }
      const auto x = seg_intersect({R[i], R[i + 1]}, {L[j], L[j + 1]}, tol);
      if (x.kind != IntersectionKind::Point && x.kind != IntersectionKind::Overlap) continue;
      bool dup = false;
      for (const auto& c : rep.crossings) {
        if (distance(c.point, x.point) <= 1e-7) dup = true;
      }
      if (dup) continue;
      rep.crossings.push_back({static_cast<int>(i), static_cast<int>(j), x.point,
                               x.kind == IntersectionKind::Overlap});
    }
  }
  rep.chains_cross = !rep.crossings.empty();
  return rep;
}

OverlapReport layout_overlaps(const Development& d, double area_tol) {
  OverlapReport rep;
  if (!d.has_layout) return rep;
  rep.layout_overlap_area = layout_overlap_area(d.layout, &rep.overlap_pairs);
  rep.layout_overlaps = rep.layout_overlap_area > area_tol;
  return rep;
}

OverlapReport overlap_report(const Development& d, const Tolerance& tol, double area_tol) {
  OverlapReport rep = chains_cross(d, tol);
  const OverlapReport a = layout_overlaps(d, area_tol);
  rep.layout_overlap_area = a.layout_overlap_area;
  rep.overlap_pairs = a.overlap_pairs;
  rep.layout_overlaps = a.layout_overlaps;
  return rep;
}

double oracle_gap(const Development& d) {
  if (!d.has_layout) throw ParameterError("development has no layout");
  double gap = 0.0;
  for (std::size_t k = 0; k < d.layout_r.size(); ++k) {
    if (!d.layout_r[k] || !d.layout_l[k]) {
      throw GeometryError("stop " + std::to_string(k) + " has no layout image");
    }
    gap = std::max(gap, distance(*d.layout_r[k], d.R.image(static_cast<int>(k))));
    gap = std::max(gap, distance(*d.layout_l[k], d.L.image(static_cast<int>(k))));
  }
  return gap;
}

CutPath extend_path_over_base(const CutPath& path, const CapLabels& labels) {
  if (path.stops.empty()) throw ParameterError("empty cut path");
  const SurfacePoint& last = path.stops.back();
  const int bi = last.kind == SurfacePoint::Kind::Vertex ? labels.b_index(last.vertex) : -1;
  if (bi < 0) throw ParameterError("path must end at a b vertex to extend over the base");
  CutPath out = path;
  out.name += "+base";
  for (int step = 1; step <= 2; ++step) {
    out.stops.push_back(SurfacePoint::at_vertex(labels.b[(bi + step) % 3]));
    out.segments.push_back(SegmentGeom::geodesic());
  }
  return out;
}

nlohmann::json to_json(const PlanarChain& c) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : c.points) pts.push_back({p.x, p.y});
  nlohmann::json marks = nlohmann::json::array();
  for (const auto& m : c.marks) {
    marks.push_back({{"point", m.point},
                     {"stop", m.stop},
                     {"interior", m.interior},
                     {"rho_deg", rad2deg(m.rho)},
                     {"lambda_deg", rad2deg(m.lambda)},
                     {"omega_deg", rad2deg(m.omega)}});
  }
  return {{"points", pts}, {"marks", marks}, {"segment_start", c.segment_start}};
}

nlohmann::json to_json(const Development& d, const CapLabels* labels) {
  (void)labels;
  nlohmann::json segs = nlohmann::json::array();
  for (const auto& s : d.segments) {
    const char* kind = s.kind == SegmentGeom::Kind::Geodesic ? "geodesic"
                       : s.kind == SegmentGeom::Kind::Arc    ? "arc"
                                                             : "polyline";
    segs.push_back({{"kind", kind},
                    {"length", s.geodesic.length},
                    {"faces", s.geodesic.faces},
                    {"theta_ref_deg", rad2deg(s.theta_ref)},
                    {"place_r", {s.place_r.angle(), s.place_r.translation().x,
                                 s.place_r.translation().y}},
                    {"place_l", {s.place_l.angle(), s.place_l.translation().x,
                                 s.place_l.translation().y}}});
  }
  nlohmann::json j{{"schema", "capzip.development/1"},
                   {"name", d.name},
                   {"extended", d.extended},
                   {"R", to_json(d.R)},
                   {"L", to_json(d.L)},
                   {"segments", segs}};
  if (d.has_layout) {
    nlohmann::json regions = nlohmann::json::array();
    for (const auto& r : d.layout.regions) {
      if (!r.active) continue;
      nlohmann::json poly = nlohmann::json::array();
      if (r.placed) {
        for (const auto& p : r.placed_poly()) poly.push_back({p.x, p.y});
      }
      regions.push_back({{"face", r.face},
                         {"counted", r.counted},
                         {"placed", r.placed},
                         {"piece", r.piece},
                         {"polygon", poly}});
    }
    j["layout"] = {{"regions", regions},
                   {"pieces", d.layout.pieces},
                   {"unplaced", d.layout.unplaced},
                   {"consistent", d.layout.consistent},
                   {"max_mismatch", d.layout.max_mismatch},
                   {"free_boundary_length", d.layout.free_boundary_length}};
  }
  return j;
}

}  // namespace capzip
