#pragma once

// Planar and spatial primitives shared by every other module.
//
// Lengths are in units of the cap's inner triangle side. Every predicate
// takes an explicit Tolerance; there is no exact arithmetic anywhere.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace capzip {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2() = default;
  constexpr Point2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  constexpr Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  constexpr Point2 operator-() const { return {-x, -y}; }
  constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Point2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Point2& operator+=(const Point2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Point2& operator-=(const Point2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr bool operator==(const Point2&) const = default;
};

inline constexpr Point2 operator*(double s, const Point2& p) { return p * s; }

inline constexpr double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point2& a) { return std::hypot(a.x, a.y); }
inline constexpr double norm2(const Point2& a) { return dot(a, a); }
inline double distance(const Point2& a, const Point2& b) { return norm(a - b); }
inline double angle_of(const Point2& a) { return std::atan2(a.y, a.x); }
inline Point2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline Point2 rotate(const Point2& p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}
inline constexpr Point2 perp(const Point2& a) { return {-a.y, a.x}; }
inline constexpr Point2 lerp(const Point2& a, const Point2& b, double t) {
  return a + (b - a) * t;
}

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Point3() = default;
  constexpr Point3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Point3 operator-() const { return {-x, -y, -z}; }
  constexpr Point3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Point3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr Point3& operator+=(const Point3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr bool operator==(const Point3&) const = default;
};

inline constexpr Point3 operator*(double s, const Point3& p) { return p * s; }
inline constexpr double dot(const Point3& a, const Point3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline constexpr Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Point3& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Point3& a, const Point3& b) { return norm(a - b); }
inline constexpr Point3 lerp(const Point3& a, const Point3& b, double t) {
  return a + (b - a) * t;
}
inline constexpr Point2 project_xy(const Point3& p) { return {p.x, p.y}; }

// Unsigned angle at `apex` between rays to `a` and `b`, in [0, pi].
double angle_between(const Point3& a, const Point3& apex, const Point3& b);
double angle_between(const Point2& a, const Point2& apex, const Point2& b);

// Map an angle into (-pi, pi].
double normalize_angle(double angle);
// Map an angle into [0, period).
double wrap_positive(double angle, double period = kTwoPi);

struct Tolerance {
  double eps_len = 1e-9;  // coincidence of points
  double eps_ang = 1e-9;  // radians

  // Throws ParameterError unless both are positive.
  void validate() const;
};

// Orientation-preserving rigid motion p -> R(angle) p + translation.
class Rigid2 {
 public:
  Rigid2() = default;
  Rigid2(double angle, Point2 translation);

  // The motion taking segment (src_a, src_b) onto (dst_a, dst_b). Lengths
  // should agree; only the directions and the first endpoint are matched.
  static Rigid2 from_segments(const Point2& src_a, const Point2& src_b, const Point2& dst_a,
                              const Point2& dst_b);

  Point2 apply(const Point2& p) const;
  Point2 apply_vector(const Point2& v) const;
  double angle() const { return angle_; }
  const Point2& translation() const { return translation_; }

  Rigid2 inverse() const;
  // (a * b)(p) == a(b(p))
  Rigid2 operator*(const Rigid2& other) const;

 private:
  double angle_ = 0.0;
  double cos_ = 1.0;
  double sin_ = 0.0;
  Point2 translation_{};
};

struct Rotation2 {
  Point2 center{};
  double angle = 0.0;  // CCW, normalized into (-pi, pi]

  Rotation2() = default;
  Rotation2(Point2 center_, double angle_);

  Point2 apply(const Point2& p) const;
  Rigid2 to_rigid() const;
};

// Result of composing two rotations. When the angles cancel the result is a
// pure translation and `is_translation` is set.
struct ComposedMotion {
  bool is_translation = false;
  Rotation2 rotation;
  Point2 translation{};

  Point2 apply(const Point2& p) const;
};

// The single motion equivalent to applying `first`, then `second`.
ComposedMotion compose_rotations(const Rotation2& first, const Rotation2& second,
                                 const Tolerance& tol = {});

struct Segment2 {
  Point2 a;
  Point2 b;
  double length() const { return distance(a, b); }
};

enum class IntersectionKind {
  None,
  Point,    // transversal crossing interior to both segments
  Touch,    // contact at an endpoint of at least one segment
  Overlap,  // collinear overlap of positive length
};

struct SegmentIntersection {
  IntersectionKind kind = IntersectionKind::None;
  Point2 point{};  // crossing / touch point, or first overlap endpoint
  Point2 point2{};  // second overlap endpoint (Overlap only)
};

// Symmetric in its arguments. Throws GeometryError on zero-length input.
SegmentIntersection seg_intersect(const Segment2& s, const Segment2& t, const Tolerance& tol = {});

double signed_area(std::span<const Point2> poly);
double polygon_area(std::span<const Point2> poly);
bool is_simple_polygon(std::span<const Point2> poly, const Tolerance& tol = {});
bool point_in_polygon(const Point2& p, std::span<const Point2> poly);
double distance_to_segment(const Point2& p, const Point2& a, const Point2& b);
double distance_to_boundary(const Point2& p, std::span<const Point2> poly);

using Triangle2 = std::array<Point2, 3>;

// Ear-clipping triangulation of a simple polygon (either orientation).
std::vector<Triangle2> triangulate(std::span<const Point2> poly, const Tolerance& tol = {});

// Area of the intersection of two convex polygons (either orientation).
double convex_intersection_area(std::span<const Point2> p, std::span<const Point2> q);

// Interior intersection area of two simple polygons. Shared edges and
// vertices contribute zero. Throws GeometryError on self-intersecting input.
double poly_overlap_area(std::span<const Point2> p, std::span<const Point2> q,
                         const Tolerance& tol = {});

struct Box2 {
  Point2 lo{1e300, 1e300};
  Point2 hi{-1e300, -1e300};

  void expand(const Point2& p);
  bool empty() const { return lo.x > hi.x; }
  bool overlaps(const Box2& o, double slack = 0.0) const;
};

Box2 bounds(std::span<const Point2> pts);

}  // namespace capzip
