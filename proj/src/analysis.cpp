#include "capzip/analysis.hpp"

#include <algorithm>
#include <set>

#include "capzip/errors.hpp"

namespace capzip {

namespace {

double segment_distance(const Point3& p1, const Point3& q1, const Point3& p2, const Point3& q2) {
  const Point3 d1 = q1 - p1, d2 = q2 - p2, r = p1 - p2;
  const double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
  double s = 0.0, t = 0.0;
  if (a <= 1e-300 && e <= 1e-300) return norm(r);
  if (a <= 1e-300) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = dot(d1, r);
    if (e <= 1e-300) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = dot(d1, d2);
      const double den = a * e - b * b;
      s = den > 1e-300 ? std::clamp((b * f - c * e) / den, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return distance(p1 + d1 * s, p2 + d2 * t);
}

bool on_surface_boundary(const Surface& s, const Point3& p, double tol) {
  for (const auto& loop : s.boundary_loops()) {
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Point3 a = s.vertex(loop[i]), b = s.vertex(loop[(i + 1) % loop.size()]);
      if (segment_distance(p, p, a, b) <= tol) return true;
    }
  }
  return false;
}

bool has_self_crossing(const std::vector<Point3>& pts, double tol) {
  std::vector<std::pair<Point3, Point3>> legs;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (distance(pts[i], pts[i + 1]) > tol) legs.push_back({pts[i], pts[i + 1]});
  }
  const std::size_t n = legs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [a, b] = legs[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& [c, e] = legs[j];
      if (j == i + 1) {
        // consecutive legs only fail by doubling back
        const Point3 u = b - a, w = e - c;
        if (dot(u, w) < 0.0 && norm(cross(u, w)) <= 1e-9 * norm(u) * norm(w)) return true;
        continue;
      }
      const double lo = std::max(std::min(a.x, b.x), std::min(c.x, e.x));
      const double hi = std::min(std::max(a.x, b.x), std::max(c.x, e.x));
      if (lo > hi + tol) continue;
      if (segment_distance(a, b, c, e) <= tol) return true;
    }
  }
  return false;
}

}  // namespace

Verdict evaluate_verdict(const Surface& s, const CutPath& path, const Development& d,
                         const CheckOptions& opt) {
  Verdict v;
  v.developed = true;
  const double tol = opt.tol.eps_len;

  std::set<int> seen;
  v.is_path = path.stops.size() >= 2;
  for (const auto& p : path.stops) {
    if (p.kind == SurfacePoint::Kind::Vertex && !seen.insert(p.vertex).second) v.is_path = false;
  }
  v.visits_all = true;
  for (int u = 0; u < s.num_vertices(); ++u) {
    if (!s.is_boundary_vertex(u) && !seen.count(u)) v.visits_all = false;
  }
  const bool closed = s.is_closed();
  const auto& first = path.stops.front();
  v.endpoints_ok = first.kind == SurfacePoint::Kind::Vertex && !s.is_boundary_vertex(first.vertex);
  if (!closed) v.endpoints_ok = v.endpoints_ok && is_on_boundary(s, path.stops.back());

  const auto pts = d.trace_points();
  auto region_of = [&](const Point3& p) {
    if (opt.labels) return point_on_cap(s, *opt.labels, project_xy(p), tol);
    return on_surface_boundary(s, p, 1e-9) ? CapRegion::OnBoundary : CapRegion::Interior;
  };
  if (!closed) {
    bool in_run = false;
    for (const auto& p : pts) {
      const CapRegion r = region_of(p);
      if (r == CapRegion::OnBoundary) {
        if (!in_run) ++v.boundary_touches;
        in_run = true;
      } else {
        in_run = false;
      }
      if (r == CapRegion::Outside) v.left_C = true;
    }
    for (std::size_t i = 0; i + 1 < pts.size() && opt.labels; ++i) {
      if (region_of((pts[i] + pts[i + 1]) * 0.5) == CapRegion::Outside) v.left_C = true;
    }
  }
  if (d.extended) {
    for (const auto& seg : d.segments) {
      for (std::size_t i = 0; i < seg.trace.points.size(); ++i) {
        const int f = seg.trace.point_faces[i];
        if (d.surface.tag(f) == kExtensionTag &&
            !on_surface_boundary(s, seg.trace.points[i], 1e-9)) {
          v.left_C = true;
        }
      }
    }
  }
  v.self_crossing = has_self_crossing(pts, tol);

  const OverlapReport rep = overlap_report(d, opt.tol, opt.area_tol);
  v.chains_cross = rep.chains_cross;
  v.crossings = static_cast<int>(rep.crossings.size());
  v.layout_overlap_area = rep.layout_overlap_area;
  v.pieces = d.has_layout ? d.layout.pieces : 0;
  v.layout_consistent = d.has_layout && d.layout.consistent && d.layout.unplaced == 0;

  if (!v.is_path) v.reasons.push_back("not-a-path");
  if (!v.visits_all) v.reasons.push_back("misses-vertices");
  if (!v.endpoints_ok) v.reasons.push_back("bad-endpoints");
  if (!closed && v.boundary_touches != 1) {
    v.reasons.push_back("boundary-touches=" + std::to_string(v.boundary_touches));
  }
  if (v.left_C) v.reasons.push_back("left-C");
  if (v.self_crossing) v.reasons.push_back("self-crossing");
  if (v.chains_cross) v.reasons.push_back("chains-cross");
  if (v.layout_overlap_area > opt.area_tol) v.reasons.push_back("layout-overlap");
  if (d.has_layout && v.pieces != 1) v.reasons.push_back("pieces=" + std::to_string(v.pieces));
  if (!v.layout_consistent) v.reasons.push_back("layout-inconsistent");
  v.unzipping = v.reasons.empty();
  return v;
}

namespace {

Verdict failed(const std::string& why, bool left) {
  Verdict v;
  v.left_C = left;
  if (left) v.reasons.push_back("left-C");
  v.reasons.push_back("development-failed: " + why);
  return v;
}

}  // namespace

Verdict check_unzipping(const Cap& cap, const CutPath& path, CheckOptions opt) {
  if (!opt.labels) opt.labels = &cap.labels;
  try {
    const Development d = develop_on_cap(cap, path, opt.develop);
    return evaluate_verdict(cap.surface, path, d, opt);
  } catch (const LeavesSurfaceError& e) {
    return failed(e.what(), true);
  } catch (const GeometryError& e) {
    return failed(e.what(), false);
  }
}

Verdict check_unzipping(const Surface& s, const CutPath& path, const CheckOptions& opt) {
  try {
    const Development d = develop_cut(s, path, opt.develop);
    return evaluate_verdict(s, path, d, opt);
  } catch (const LeavesSurfaceError& e) {
    return failed(e.what(), true);
  } catch (const GeometryError& e) {
    return failed(e.what(), false);
  }
}

MonotoneResult radially_monotone(const std::vector<Point2>& chain, double tol) {
  if (chain.size() < 2) throw ParameterError("a chain needs at least two points");
  MonotoneResult r;
  const std::size_t n = chain.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      const Point2 step = chain[j + 1] - chain[j];
      if (dot(step, chain[j] - chain[i]) < -tol) {
        r.monotone = false;
        r.i = static_cast<int>(i);
        r.j = static_cast<int>(j);
        r.witness = chain[j];
        return r;
      }
    }
  }
  return r;
}

MonotoneResult radially_monotone(const PlanarChain& chain, double tol) {
  return radially_monotone(chain.points, tol);
}

Point2 combined_center_approx(double w1, const Point2& p1, double w2, const Point2& p2) {
  if (w1 + w2 == 0.0) throw ParameterError("weights of a combined center must not cancel");
  return (p1 * w1 + p2 * w2) / (w1 + w2);
}

Point2 combined_center_exact(double w1, const Point2& p1, double w2, const Point2& p2) {
  const ComposedMotion m = compose_rotations(Rotation2(p1, w1), Rotation2(p2, w2));
  if (m.is_translation) throw GeometryError("the rotations compose to a translation");
  return m.rotation.center;
}

double effective_turn_angle(const Development& d, ChainSide side, int stop, TurnTarget target) {
  const PlanarChain& c = side == ChainSide::R ? d.R : d.L;
  const PlanarChain& o = side == ChainSide::R ? d.L : d.R;
  const int n = static_cast<int>(c.marks.size());
  if (stop < 1 || stop + 1 >= n) throw ParameterError("turn angle needs a stop with neighbours");
  const Point2 prev = c.image(stop - 1);
  const Point2 here = c.image(stop);
  Point2 next;
  switch (target) {
    case TurnTarget::OppositeImage:
      next = o.image(stop);
      break;
    case TurnTarget::Departure:
      next = c.points.at(c.marks[stop].point + 1);
      break;
    case TurnTarget::NextMark:
      next = c.image(stop + 1);
      break;
  }
  if (distance(next, here) < 1e-15) throw GeometryError("turn target coincides with the stop");
  return angle_between(prev, here, next);
}

double apron_turn_budget(const Cap& cap, int prev, int v, int next) {
  if (v == cap.labels.c) throw ParameterError("the apex is not on the apron");
  if (!cap.labels.is_a(v)) throw ParameterError("apron turns are measured at a vertices");
  const auto& s = cap.surface;
  return angle_between(project_xy(s.vertex(prev)), project_xy(s.vertex(v)),
                       project_xy(s.vertex(next)));
}

int min_cut_degree(double theta) {
  if (!(theta > 0.0)) throw ParameterError("incident angle must be positive");
  return static_cast<int>(std::floor(theta / kTwoPi)) + 1;
}

nlohmann::json to_json(const Verdict& v) {
  return {{"schema", "capzip.verdict/1"},
          {"unzipping", v.unzipping},
          {"developed", v.developed},
          {"is_path", v.is_path},
          {"visits_all", v.visits_all},
          {"endpoints_ok", v.endpoints_ok},
          {"boundary_touches", v.boundary_touches},
          {"self_crossing", v.self_crossing},
          {"chains_cross", v.chains_cross},
          {"crossings", v.crossings},
          {"layout_overlap_area", v.layout_overlap_area},
          {"left_C", v.left_C},
          {"pieces", v.pieces},
          {"layout_consistent", v.layout_consistent},
          {"reasons", v.reasons}};
}

}  // namespace capzip
