#include "capzip/geom.hpp"

#include <algorithm>
#include <limits>

#include "capzip/errors.hpp"

namespace capzip {

double angle_between(const Point3& a, const Point3& apex, const Point3& b) {
  const Point3 u = a - apex;
  const Point3 v = b - apex;
  // atan2 form stays accurate for angles near 0 and pi.
  return std::atan2(norm(cross(u, v)), dot(u, v));
}

double angle_between(const Point2& a, const Point2& apex, const Point2& b) {
  const Point2 u = a - apex;
  const Point2 v = b - apex;
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

double normalize_angle(double angle) {
  double a = std::remainder(angle, kTwoPi);  // [-pi, pi]
  if (a <= -kPi) a += kTwoPi;
  return a;
}

double wrap_positive(double angle, double period) {
  double a = std::fmod(angle, period);
  if (a < 0.0) a += period;
  if (a >= period) a -= period;
  return a;
}

void Tolerance::validate() const {
  if (!(eps_len > 0.0) || !(eps_ang > 0.0)) {
    throw ParameterError("tolerance values must be positive");
  }
}

// ---------------------------------------------------------------------------
// Rigid motions

Rigid2::Rigid2(double angle, Point2 translation)
    : angle_(angle), cos_(std::cos(angle)), sin_(std::sin(angle)), translation_(translation) {}

Rigid2 Rigid2::from_segments(const Point2& src_a, const Point2& src_b, const Point2& dst_a,
                             const Point2& dst_b) {
  const double angle = angle_of(dst_b - dst_a) - angle_of(src_b - src_a);
  Rigid2 r(angle, {});
  r.translation_ = dst_a - r.apply_vector(src_a);
  return r;
}

Point2 Rigid2::apply(const Point2& p) const {
  return {cos_ * p.x - sin_ * p.y + translation_.x, sin_ * p.x + cos_ * p.y + translation_.y};
}

Point2 Rigid2::apply_vector(const Point2& v) const {
  return {cos_ * v.x - sin_ * v.y, sin_ * v.x + cos_ * v.y};
}

Rigid2 Rigid2::inverse() const {
  Rigid2 r(-angle_, {});
  r.translation_ = -r.apply_vector(translation_);
  return r;
}

Rigid2 Rigid2::operator*(const Rigid2& other) const {
  Rigid2 r(angle_ + other.angle_, {});
  r.translation_ = apply(other.translation_);
  return r;
}

Rotation2::Rotation2(Point2 center_, double angle_)
    : center(center_), angle(normalize_angle(angle_)) {}

Point2 Rotation2::apply(const Point2& p) const { return center + rotate(p - center, angle); }

Rigid2 Rotation2::to_rigid() const {
  Rigid2 r(angle, {});
  return Rigid2(angle, center - r.apply_vector(center));
}

Point2 ComposedMotion::apply(const Point2& p) const {
  return is_translation ? p + translation : rotation.apply(p);
}

ComposedMotion compose_rotations(const Rotation2& first, const Rotation2& second,
                                 const Tolerance& tol) {
  const Rigid2 total = second.to_rigid() * first.to_rigid();
  const double angle = normalize_angle(first.angle + second.angle);
  ComposedMotion out;
  if (std::abs(angle) <= tol.eps_ang) {
    if (norm(total.translation()) <= tol.eps_len) {
      out.rotation = Rotation2(first.center, 0.0);
    } else {
      out.is_translation = true;
      out.translation = total.translation();
    }
    return out;
  }
  // Fixed point c = R c + t  =>  (I - R) c = t.
  const double c = std::cos(angle), s = std::sin(angle);
  const double a11 = 1.0 - c, a12 = s, a21 = -s, a22 = 1.0 - c;
  const double det = a11 * a22 - a12 * a21;
  const Point2 t = total.translation();
  const Point2 center{(a22 * t.x - a12 * t.y) / det, (-a21 * t.x + a11 * t.y) / det};
  out.rotation = Rotation2(center, angle);
  return out;
}

// ---------------------------------------------------------------------------
// Segment intersection

SegmentIntersection seg_intersect(const Segment2& s, const Segment2& t, const Tolerance& tol) {
  const Point2 d1 = s.b - s.a;
  const Point2 d2 = t.b - t.a;
  const double l1 = norm(d1);
  const double l2 = norm(d2);
  if (l1 <= tol.eps_len || l2 <= tol.eps_len) {
    throw GeometryError("seg_intersect: zero-length segment");
  }
  SegmentIntersection out;
  const double den = cross(d1, d2);
  if (std::abs(den) <= tol.eps_ang * l1 * l2) {
    const double off = std::abs(cross(d1, t.a - s.a)) / l1;
    if (off > tol.eps_len) return out;
    const Point2 dir = d1 / l1;
    const double u0 = dot(t.a - s.a, dir);
    const double u1 = dot(t.b - s.a, dir);
    const double lo = std::max(0.0, std::min(u0, u1));
    const double hi = std::min(l1, std::max(u0, u1));
    if (hi - lo > tol.eps_len) {
      out.kind = IntersectionKind::Overlap;
      out.point = s.a + dir * lo;
      out.point2 = s.a + dir * hi;
    } else if (hi - lo >= -tol.eps_len) {
      out.kind = IntersectionKind::Touch;
      out.point = s.a + dir * (0.5 * (lo + hi));
    }
    return out;
  }
  const Point2 w = t.a - s.a;
  const double ps = cross(w, d2) / den;  // parameter on s
  const double pt = cross(w, d1) / den;  // parameter on t
  const double es = tol.eps_len / l1;
  const double et = tol.eps_len / l2;
  if (ps < -es || ps > 1.0 + es || pt < -et || pt > 1.0 + et) return out;
  out.point = (s.a + d1 * ps + t.a + d2 * pt) * 0.5;
  const bool at_end = ps <= es || ps >= 1.0 - es || pt <= et || pt >= 1.0 - et;
  out.kind = at_end ? IntersectionKind::Touch : IntersectionKind::Point;
  return out;
}

// ---------------------------------------------------------------------------
// Polygons

double signed_area(std::span<const Point2> poly) {
  const std::size_t n = poly.size();
  double a = 0.0;
  for (std::size_t i = 0; i < n; ++i) a += cross(poly[i], poly[(i + 1) % n]);
  return 0.5 * a;
}

double polygon_area(std::span<const Point2> poly) { return std::abs(signed_area(poly)); }

double distance_to_segment(const Point2& p, const Point2& a, const Point2& b) {
  const Point2 d = b - a;
  const double l2 = norm2(d);
  if (l2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, d) / l2, 0.0, 1.0);
  return distance(p, a + d * t);
}

double distance_to_boundary(const Point2& p, std::span<const Point2> poly) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, distance_to_segment(p, poly[i], poly[(i + 1) % n]));
  }
  return best;
}

bool point_in_polygon(const Point2& p, std::span<const Point2> poly) {
  // Crossing-number test; points on the boundary go either way.
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& a = poly[i];
    const Point2& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

bool is_simple_polygon(std::span<const Point2> poly, const Tolerance& tol) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(poly[i], poly[(i + 1) % n]) <= tol.eps_len) return false;
  }
  if (polygon_area(poly) <= tol.eps_len * tol.eps_len) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Segment2 si{poly[i], poly[(i + 1) % n]};
    for (std::size_t j = i + 1; j < n; ++j) {
      const Segment2 sj{poly[j], poly[(j + 1) % n]};
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const auto hit = seg_intersect(si, sj, tol);
      if (adjacent) {
        if (hit.kind == IntersectionKind::Overlap) return false;
        if (hit.kind == IntersectionKind::Point) return false;
      } else if (hit.kind != IntersectionKind::None) {
        return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<Point2> ccw_copy(std::span<const Point2> poly) {
  std::vector<Point2> out(poly.begin(), poly.end());
  if (signed_area(out) < 0.0) std::reverse(out.begin(), out.end());
  return out;
}

// Drops repeated points and vertices whose turn is negligible.
std::vector<Point2> drop_collinear(std::vector<Point2> pts, double eps) {
  bool changed = true;
  while (changed && pts.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size() && pts.size() > 3; ++i) {
      const std::size_t n = pts.size();
      const Point2& prev = pts[(i + n - 1) % n];
      const Point2& cur = pts[i];
      const Point2& next = pts[(i + 1) % n];
      const double span_len = distance(prev, next);
      const bool dup = distance(prev, cur) <= eps;
      const bool flat = std::abs(cross(cur - prev, next - cur)) <= eps * std::max(span_len, eps) &&
                        dot(cur - prev, next - cur) >= 0.0;
      if (dup || flat) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        --i;
      }
    }
  }
  return pts;
}

bool inside_triangle_strict(const Point2& p, const Point2& a, const Point2& b, const Point2& c,
                            double eps) {
  const double d1 = cross(b - a, p - a);
  const double d2 = cross(c - b, p - b);
  const double d3 = cross(a - c, p - c);
  return d1 >= -eps && d2 >= -eps && d3 >= -eps;
}

double area_ccw(const std::vector<Point2>& poly) { return signed_area(poly); }

}  // namespace

std::vector<Triangle2> triangulate(std::span<const Point2> poly, const Tolerance& tol) {
  std::vector<Point2> pts = drop_collinear(ccw_copy(poly), tol.eps_len);
  std::vector<Triangle2> tris;
  if (pts.size() < 3) return tris;
  tris.reserve(pts.size() - 2);
  while (pts.size() > 3) {
    const std::size_t n = pts.size();
    std::size_t best = n;
    double best_cross = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& a = pts[(i + n - 1) % n];
      const Point2& b = pts[i];
      const Point2& c = pts[(i + 1) % n];
      const double turn = cross(b - a, c - b);
      if (turn <= 0.0) continue;
      bool ear = true;
      for (std::size_t k = 0; k < n && ear; ++k) {
        if (k == i || k == (i + n - 1) % n || k == (i + 1) % n) continue;
        const Point2& p = pts[k];
        if (p == a || p == b || p == c) continue;
        if (inside_triangle_strict(p, a, b, c, 0.0)) ear = false;
      }
      if (ear) {
        best = i;
        break;
      }
      if (turn > best_cross) best_cross = turn;
    }
    if (best == n) {
      // Numerically stuck (nearly degenerate input). Clip the most convex
      // vertex so the loop terminates; the lost area is at rounding level.
      for (std::size_t i = 0; i < n; ++i) {
        const double turn = cross(pts[i] - pts[(i + n - 1) % n], pts[(i + 1) % n] - pts[i]);
        if (turn == best_cross || best == n) best = i;
        if (turn == best_cross) break;
      }
    }
    tris.push_back({pts[(best + n - 1) % n], pts[best], pts[(best + 1) % n]});
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(best));
  }
  if (area_ccw(pts) > 0.0) tris.push_back({pts[0], pts[1], pts[2]});
  return tris;
}

double convex_intersection_area(std::span<const Point2> p, std::span<const Point2> q) {
  std::vector<Point2> subject = ccw_copy(p);
  const std::vector<Point2> clip = ccw_copy(q);
  std::vector<Point2> next;
  const std::size_t m = clip.size();
  for (std::size_t i = 0; i < m && !subject.empty(); ++i) {
    const Point2 a = clip[i];
    const Point2 b = clip[(i + 1) % m];
    const Point2 e = b - a;
    next.clear();
    const std::size_t n = subject.size();
    for (std::size_t k = 0; k < n; ++k) {
      const Point2& cur = subject[k];
      const Point2& nxt = subject[(k + 1) % n];
      const double dc = cross(e, cur - a);
      const double dn = cross(e, nxt - a);
      if (dc >= 0.0) next.push_back(cur);
      if ((dc >= 0.0) != (dn >= 0.0)) {
        const double t = dc / (dc - dn);
        next.push_back(cur + (nxt - cur) * t);
      }
    }
    subject.swap(next);
  }
  if (subject.size() < 3) return 0.0;
  return std::max(0.0, signed_area(subject));
}

double poly_overlap_area(std::span<const Point2> p, std::span<const Point2> q,
                         const Tolerance& tol) {
  if (!is_simple_polygon(p, tol) || !is_simple_polygon(q, tol)) {
    throw GeometryError("poly_overlap_area: input polygon is not simple");
  }
  const Box2 bp = bounds(p);
  const Box2 bq = bounds(q);
  if (!bp.overlaps(bq)) return 0.0;
  const auto tp = triangulate(p, tol);
  const auto tq = triangulate(q, tol);
  double area = 0.0;
  for (const auto& a : tp) {
    const Box2 ba = bounds(a);
    for (const auto& b : tq) {
      if (!ba.overlaps(bounds(b))) continue;
      area += convex_intersection_area(a, b);
    }
  }
  return area;
}

void Box2::expand(const Point2& p) {
  lo.x = std::min(lo.x, p.x);
  lo.y = std::min(lo.y, p.y);
  hi.x = std::max(hi.x, p.x);
  hi.y = std::max(hi.y, p.y);
}

bool Box2::overlaps(const Box2& o, double slack) const {
  return !(o.lo.x > hi.x + slack || o.hi.x < lo.x - slack || o.lo.y > hi.y + slack ||
           o.hi.y < lo.y - slack);
}

Box2 bounds(std::span<const Point2> pts) {
  Box2 b;
  for (const auto& p : pts) b.expand(p);
  return b;
}

}  // namespace capzip
