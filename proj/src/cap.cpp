#include "capzip/cap.hpp"

#include <algorithm>
#include <cstdio>

#include "capzip/errors.hpp"

namespace capzip {

namespace {

constexpr double kInnerCircumradius = 0.57735026918962576;  // 1/sqrt(3)

double theta_of(int i) { return deg2rad(90.0 + 120.0 * i); }

}  // namespace

void CapParams::validate() const {
  if (!(epsilon > 0.0)) throw ParameterError("epsilon must be positive");
  if (!(z_a > 0.0)) throw ParameterError("z_a must be positive");
  if (!(z_c > z_a)) throw ParameterError("z_c must exceed z_a");
  if (!std::isfinite(epsilon) || !std::isfinite(z_c)) throw ParameterError("non-finite parameter");
}

std::string CapLabels::name(int v) const {
  for (int i = 0; i < 3; ++i) {
    if (a[i] == v) return "a" + std::to_string(i + 1);
    if (b[i] == v) return "b" + std::to_string(i + 1);
  }
  if (v == c) return "c";
  return "v" + std::to_string(v);
}

int CapLabels::id(const std::string& n) const {
  if (n == "c") return c;
  if (n.size() == 2 && (n[0] == 'a' || n[0] == 'b') && n[1] >= '1' && n[1] <= '3') {
    const int i = n[1] - '1';
    return n[0] == 'a' ? a[i] : b[i];
  }
  if (n.size() > 1 && n[0] == 'v') {
    try {
      return std::stoi(n.substr(1));
    } catch (const std::exception&) {
    }
  }
  throw ParameterError("unknown vertex name '" + n + "'");
}

bool CapLabels::is_a(int v) const { return a_index(v) >= 0; }
bool CapLabels::is_b(int v) const { return b_index(v) >= 0; }

int CapLabels::a_index(int v) const {
  for (int i = 0; i < 3; ++i) {
    if (a[i] == v) return i;
  }
  return -1;
}

int CapLabels::b_index(int v) const {
  for (int i = 0; i < 3; ++i) {
    if (b[i] == v) return i;
  }
  return -1;
}

Cap build_cap_unchecked(const CapParams& params) {
  std::vector<Point3> v(7);
  for (int i = 0; i < 3; ++i) {
    const double t = theta_of(i);
    const double rb = kInnerCircumradius + params.epsilon;
    v[i] = {rb * std::cos(t), rb * std::sin(t), 0.0};
    v[3 + i] = {kInnerCircumradius * std::cos(t), kInnerCircumradius * std::sin(t), params.z_a};
  }
  v[6] = {0.0, 0.0, params.z_c};
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    faces.push_back({i, j, 3 + j, 3 + i});
  }
  for (int i = 0; i < 3; ++i) faces.push_back({6, 3 + i, 3 + (i + 1) % 3});
  return Cap{params, Surface(std::move(v), std::move(faces)), CapLabels{}};
}

Cap build_cap(const CapParams& params) {
  params.validate();
  Cap cap = build_cap_unchecked(params);
  const auto rep = convexity_report(cap.surface);
  if (!rep.convex) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "cap (eps=%.6g, z_a=%.6g, z_c=%.6g) is not convex (min curvature %.3g rad, "
                  "fold %.3g)",
                  params.epsilon, params.z_a, params.z_c, rep.min_curvature, rep.max_fold);
    throw ParameterError(buf);
  }
  return cap;
}

Surface extend_with_skirts(const Cap& cap) {
  const Surface& s = cap.surface;
  std::vector<Point3> v = s.vertices();
  std::vector<std::vector<int>> faces = s.faces();
  std::vector<int> tags(faces.size(), 0);
  for (int i = 0; i < 3; ++i) {
    const Point3 p = s.vertex(cap.labels.b[i]);
    const Point3 q = s.vertex(cap.labels.b[(i + 1) % 3]);
    const Point3 r = s.vertex(cap.labels.b[(i + 2) % 3]);
    // reflect r across the line pq within z = 0
    const Point3 d = (q - p) / norm(q - p);
    const Point3 foot = p + d * dot(r - p, d);
    v.push_back(foot * 2.0 - r);
    faces.push_back({cap.labels.b[(i + 1) % 3], cap.labels.b[i], static_cast<int>(v.size()) - 1});
    tags.push_back(kExtensionTag);
  }
  return Surface(std::move(v), std::move(faces), std::move(tags));
}

Surface close_with_base(const Surface& s, const CapLabels& labels) {
  if (s.boundary_loops().size() != 1 || s.boundary_loops()[0].size() != 3) {
    throw ParameterError("close_with_base expects a cap with a triangular boundary");
  }
  std::vector<std::vector<int>> faces = s.faces();
  std::vector<int> tags;
  for (int f = 0; f < s.num_faces(); ++f) tags.push_back(s.tag(f));
  faces.push_back({labels.b[0], labels.b[2], labels.b[1]});
  tags.push_back(kBaseTag);
  return Surface(s.vertices(), std::move(faces), std::move(tags));
}

double cap_phi(const Surface& s) {
  double phi = 0.0;
  for (int f = 0; f < s.num_faces(); ++f) {
    const Point3 n = s.normal(f);
    if (n.z <= 0.0) throw ParameterError("cap_phi is not defined: a face normal points downward");
    phi = std::max(phi, std::acos(std::clamp(n.z, -1.0, 1.0)));
  }
  return phi;
}

ConvexityReport convexity_report(const Surface& s, double tol) {
  ConvexityReport r;
  r.min_curvature = kTwoPi;
  bool any_interior = false;
  bool all_flat = true;
  for (int v = 0; v < s.num_vertices(); ++v) {
    if (s.is_boundary_vertex(v)) continue;
    any_interior = true;
    const double w = vertex_curvature(s, v);
    r.min_curvature = std::min(r.min_curvature, w);
    if (std::abs(w) > tol) all_flat = false;
  }
  if (!any_interior) r.min_curvature = 0.0;
  double worst_fold = -1e300;  // positive = reflex
  for (int f = 0; f < s.num_faces(); ++f) {
    const Point3 n = s.normal(f);
    const Point3 o = s.vertex(s.face(f)[0]);
    for (int k = 0; k < s.face_size(f); ++k) {
      const EdgeRef t = s.twin(f, k);
      if (!t.valid()) continue;
      for (int w : s.face(t.face)) {
        if (s.corner_of(f, w) >= 0) continue;
        const double off = dot(s.vertex(w) - o, n);
        worst_fold = std::max(worst_fold, off);
        if (std::abs(off) > tol) all_flat = false;
      }
    }
  }
  r.max_fold = worst_fold < -1e299 ? 0.0 : worst_fold;
  r.degenerate = all_flat;
  const bool folds_ok = r.max_fold <= tol;
  const bool curv_ok = !any_interior || r.min_curvature >= -tol;
  r.convex = all_flat || (folds_ok && curv_ok);
  return r;
}

bool validate_convex(const Surface& s, double tol) { return convexity_report(s, tol).convex; }

namespace {

double apex_curvature_for_height(double h) {
  // The apex faces depend only on h = z_c - z_a.
  const Cap cap = build_cap_unchecked(CapParams{0.1, 1.0, 1.0 + h});
  return vertex_curvature(cap.surface, cap.labels.c);
}

double a_curvature(double eps, double z_a, double h) {
  const Cap cap = build_cap_unchecked(CapParams{eps, z_a, z_a + h});
  return vertex_curvature(cap.surface, cap.labels.a[0]);
}

template <class F>
double bisect(F f, double lo, double hi, int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

CapParams solve_params_for_curvatures(double omega_a, double omega_c, double epsilon) {
  if (!(omega_a > 0.0) || !(omega_c > 0.0)) {
    throw ParameterError("target curvatures must be positive");
  }
  if (omega_a >= deg2rad(30.0) || omega_c >= deg2rad(30.0)) {
    throw ParameterError("target curvatures must be below 30 degrees");
  }
  if (!(epsilon > 0.0)) throw ParameterError("epsilon must be positive");

  // Stage 1: apex height from omega_c (monotone in h).
  auto fc = [&](double h) { return apex_curvature_for_height(h) - omega_c; };
  double hi = 1e-12;
  while (fc(hi) < 0.0) {
    hi *= 2.0;
    if (hi > 1.0) throw ConvergenceError("no apex height below 1 reaches omega_c");
  }
  const double h = bisect(fc, hi / 2.0, hi);

  // Stage 2: first sign change of omega_a - target scanning z_a upward.
  auto fa = [&](double z) { return a_curvature(epsilon, z, h) - omega_a; };
  const double z_max = 1.0 - h;
  if (!(z_max > 0.0)) throw ConvergenceError("apex height leaves the search box");
  double prev = 1e-12;
  double fprev = fa(prev);
  double root = -1.0;
  const int steps = 600;
  for (int i = 1; i <= steps && root < 0.0; ++i) {
    const double z = 1e-12 * std::pow(z_max / 1e-12, static_cast<double>(i) / steps);
    const double fz = fa(z);
    if (fprev < 0.0 && fz >= 0.0) root = bisect(fa, prev, z);
    prev = z;
    fprev = fz;
  }
  if (root < 0.0) throw ConvergenceError("no z_a in (0, 1) reaches omega_a");

  // Newton polish on the full 2x2 system with a numerical Jacobian.
  double za = root, zc = root + h;
  auto residual = [&](double x, double y, double& ra, double& rc) {
    const Cap cap = build_cap_unchecked(CapParams{epsilon, x, y});
    ra = vertex_curvature(cap.surface, cap.labels.a[0]) - omega_a;
    rc = vertex_curvature(cap.surface, cap.labels.c) - omega_c;
  };
  for (int it = 0; it < 4; ++it) {
    double ra, rc;
    residual(za, zc, ra, rc);
    if (std::abs(ra) < 1e-13 && std::abs(rc) < 1e-13) break;
    const double step = 1e-7 * std::max(za, 1e-6);
    double ra1, rc1, ra2, rc2;
    residual(za + step, zc, ra1, rc1);
    residual(za, zc + step, ra2, rc2);
    const double j11 = (ra1 - ra) / step, j12 = (ra2 - ra) / step;
    const double j21 = (rc1 - rc) / step, j22 = (rc2 - rc) / step;
    const double det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-300) break;
    const double dx = (ra * j22 - rc * j12) / det;
    const double dy = (j11 * rc - j21 * ra) / det;
    const double nx = za - dx, ny = zc - dy;
    double na, nc;
    if (!(nx > 0.0) || !(ny > nx)) break;
    residual(nx, ny, na, nc);
    if (std::hypot(na, nc) >= std::hypot(ra, rc)) break;
    za = nx;
    zc = ny;
  }
  double ra, rc;
  residual(za, zc, ra, rc);
  if (std::abs(ra) > 1e-9 || std::abs(rc) > 1e-9) {
    throw ConvergenceError("curvature solve did not converge");
  }
  if (!(zc < 1.0)) throw ConvergenceError("solution leaves the search box (0, 1)^2");
  return CapParams{epsilon, za, zc};
}

const char* to_string(CapRegion r) {
  switch (r) {
    case CapRegion::Interior:
      return "interior";
    case CapRegion::OnBoundary:
      return "on-boundary";
    case CapRegion::Outside:
      return "outside";
  }
  return "?";
}

CapRegion point_on_cap(const Surface& s, const CapLabels& labels, const Point2& p, double tol) {
  std::vector<Point2> tri;
  for (int b : labels.b) tri.push_back(project_xy(s.vertex(b)));
  if (signed_area(tri) < 0.0) std::reverse(tri.begin(), tri.end());
  double min_signed = 1e300;
  for (int i = 0; i < 3; ++i) {
    const Point2 a = tri[i], b = tri[(i + 1) % 3];
    const double d = cross(b - a, p - a) / norm(b - a);
    min_signed = std::min(min_signed, d);
  }
  if (min_signed > tol) return CapRegion::Interior;
  if (min_signed >= -tol) return CapRegion::OnBoundary;
  return CapRegion::Outside;
}

CapReport cap_report(const Cap& cap) {
  CapReport r{};
  for (int i = 0; i < 3; ++i) r.omega_a[i] = vertex_curvature(cap.surface, cap.labels.a[i]);
  r.omega_c = vertex_curvature(cap.surface, cap.labels.c);
  r.phi = cap_phi(cap.surface);
  r.convex = validate_convex(cap.surface);
  return r;
}

nlohmann::json to_json(const CapParams& p) {
  return {{"epsilon", p.epsilon}, {"z_a", p.z_a}, {"z_c", p.z_c}};
}

CapParams cap_params_from_json(const nlohmann::json& j) {
  try {
    return CapParams{j.at("epsilon").get<double>(), j.at("z_a").get<double>(),
                     j.at("z_c").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cap params: ") + e.what());
  }
}

nlohmann::json cap_to_json(const Cap& cap) {
  const Surface& s = cap.surface;
  nlohmann::json verts = nlohmann::json::array();
  for (int v = 0; v < s.num_vertices(); ++v) {
    const Point3& p = s.vertex(v);
    verts.push_back({{"id", v}, {"label", cap.labels.name(v)}, {"xyz", {p.x, p.y, p.z}}});
  }
  const CapReport r = cap_report(cap);
  nlohmann::json curv = nlohmann::json::object();
  for (int i = 0; i < 3; ++i) curv["a" + std::to_string(i + 1)] = rad2deg(r.omega_a[i]);
  curv["c"] = rad2deg(r.omega_c);
  return {{"schema", "capzip.cap/1"},
          {"params", to_json(cap.params)},
          {"vertices", verts},
          {"faces", s.faces()},
          {"boundary", s.boundary_loops().empty() ? std::vector<int>{} : s.boundary_loops()[0]},
          {"curvature_deg", curv},
          {"phi_deg", rad2deg(r.phi)},
          {"convex", r.convex}};
}

}  // namespace capzip
