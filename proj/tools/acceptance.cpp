// Runs the acceptance checks and prints one PASS/FAIL line per criterion.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "capzip/analysis.hpp"
#include "capzip/cap.hpp"
#include "capzip/cutpath.hpp"
#include "capzip/development.hpp"
#include "capzip/edge_unzip.hpp"
#include "capzip/errors.hpp"
#include "capzip/mesh_io.hpp"
#include "capzip/search.hpp"

#ifndef CAPZIP_DATA_DIR
#define CAPZIP_DATA_DIR "data"
#endif

using namespace capzip;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

CapParams p_star() { return solve_params_for_curvatures(deg2rad(5.0), deg2rad(10.0), 0.1); }

// Lemma reports at the standard fixture, computed once.
const std::vector<LemmaReport>& lemma_reports() {
  static const std::vector<LemmaReport> reports = [] {
    std::vector<LemmaReport> r;
    for (int n = 1; n <= 4; ++n) r.push_back(run_lemma_scenario(n, p_star()));
    return r;
  }();
  return reports;
}

const SweepResult& acceptance_sweep(double* seconds) {
  static double secs = 0.0;
  static const SweepResult result = [] {
    SweepGrid g = default_sweep_grid();
    g.workers = 4;
    const auto t0 = std::chrono::steady_clock::now();
    SweepResult r = sweep(g);
    secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }();
  if (seconds) *seconds = secs;
  return result;
}

Development closed_fixture() {
  const Cap cap = build_cap(p_star());
  const CutPath path =
      extend_path_over_base(lemma_arc_path(cap.surface, cap.labels, lemma_path_type(1)), cap.labels);
  return develop_cut(close_with_base(cap.surface, cap.labels), path);
}

// Replaces every geodesic segment with a random smooth bump polyline.
CutPath wiggle(const CutPath& p, std::mt19937& rng, double amplitude) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CutPath q = p;
  q.name = p.name + "-wiggle";
  for (auto& g : q.segments) {
    if (g.kind != SegmentGeom::Kind::Geodesic) continue;
    const int n = 12;
    const double a1 = amplitude * u(rng), a2 = amplitude * u(rng), a3 = amplitude * u(rng);
    std::vector<Point2> pts;
    for (int i = 0; i <= n; ++i) {
      const double t = static_cast<double>(i) / n;
      const double y = a1 * std::sin(kPi * t) + a2 * std::sin(2 * kPi * t) +
                       a3 * std::sin(3 * kPi * t);
      pts.push_back({t, i == 0 || i == n ? 0.0 : y});
    }
    g = SegmentGeom::polyline(pts);
  }
  return q;
}

// Straight and arc cut paths of every type on one cap.
std::vector<CutPath> fixture_paths(const Cap& cap) {
  std::vector<CutPath> out;
  for (int n = 1; n <= 4; ++n) {
    out.push_back(straight_path(cap.surface, cap.labels, lemma_path_type(n)));
    out.push_back(lemma_arc_path(cap.surface, cap.labels, lemma_path_type(n)));
  }
  return out;
}

CutPath geodesic_path(std::string name, std::vector<SurfacePoint> stops) {
  CutPath p;
  p.name = std::move(name);
  p.stops = std::move(stops);
  p.segments.assign(p.stops.size() - 1, SegmentGeom::geodesic());
  return p;
}

// Short outward cuts from the apex. They are not unzippings but their
// developments are mostly radially monotone, which exercises the RM property.
std::vector<CutPath> radial_paths(const Cap& cap, std::mt19937& rng) {
  const auto& l = cap.labels;
  std::vector<CutPath> out;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    out.push_back(geodesic_path("c-a-b", {SurfacePoint::at_vertex(l.c), SurfacePoint::at_vertex(l.a[i]),
                                          SurfacePoint::at_vertex(l.b[i])}));
    out.push_back(geodesic_path("c-mid", {SurfacePoint::at_vertex(l.c),
                                          SurfacePoint::on_edge(l.b[i], l.b[j], 0.5)}));
    out.push_back(wiggle(out.back(), rng, 0.02));
    out.push_back(geodesic_path("a-mid", {SurfacePoint::at_vertex(l.a[i]),
                                          SurfacePoint::on_edge(l.b[i], l.b[j], 0.4)}));
  }
  return out;
}

// Developments over a spread of caps. Cut-path fixtures visit every
// interior vertex, so their layouts are flat immersions; with `radial` the
// short apex cuts are added too (chain properties only).
std::vector<Development> developments(bool radial) {
  std::vector<Development> out;
  std::mt19937 rng(11);
  const double omegas[] = {0.5, 2.0, 10.0};
  const double eps[] = {0.01, 0.1};
  for (double e : eps) {
    for (double wa : omegas) {
      for (double wc : omegas) {
        const Cap cap = build_cap(solve_params_for_curvatures(deg2rad(wa), deg2rad(wc), e));
        auto paths = fixture_paths(cap);
        if (radial) {
          for (auto& p : radial_paths(cap, rng)) paths.push_back(std::move(p));
        }
        for (const auto& p : paths) {
          try {
            out.push_back(develop_on_cap(cap, p));
          } catch (const GeometryError&) {
          }
        }
      }
    }
  }
  return out;
}

Outcome criterion1() {
  const Cap cap = build_cap({0.1, 0.02, 0.1});
  const CapReport r = cap_report(cap);
  const double wa = rad2deg(r.omega_a[0]), wc = rad2deg(r.omega_c);
  const bool ok = std::abs(wa - 1.9) <= 0.05 && std::abs(wc - 5.6) <= 0.05 &&
                  std::abs(rad2deg(r.omega_a[1]) - wa) < 1e-9 &&
                  std::abs(rad2deg(r.omega_a[2]) - wa) < 1e-9;
  return {ok, fmt("omega_a=%.4f deg omega_c=%.4f deg", wa, wc)};
}

Outcome criterion2() {
  bool ok = true;
  std::string d;
  for (const auto& r : lemma_reports()) {
    const int n = r.straight_verdict.crossings;
    d += fmt("%s=%d ", to_string(r.type.type), n);
    if (n < 1) ok = false;
    if (r.type.type == CutType::caaab && n < 2) ok = false;
  }
  return {ok, "straight crossings " + d};
}

Outcome criterion3() {
  const MeasuredAngle& a = lemma_reports()[0].angles.at(0);
  const double v = rad2deg(a.value);
  bool ok = v >= 65.0 && v <= 75.0 && a.value > a.budget;
  const SweepResult& s = acceptance_sweep(nullptr);
  double worst_margin = 1e9;
  int checked = 0;
  for (const auto& c : s.cells) {
    if (c.skipped) {
      ok = false;
      continue;
    }
    ++checked;
    worst_margin = std::min(worst_margin, rad2deg(c.lemma1.value - c.lemma1.budget));
    if (!(c.lemma1.value > c.lemma1.budget)) ok = false;
  }
  return {ok, fmt("angle=%.3f deg budget=%.1f deg; sweep cells=%d, smallest excess=%.2f deg", v,
                  rad2deg(a.budget), checked, worst_margin)};
}

Outcome criterion4() {
  bool ok = true;
  std::string d;
  for (int n : {1, 2}) {
    const auto& v = lemma_reports()[n - 1].arc_verdict;
    d += fmt("%s: crossings=%d area=%.2e left_C=%d unzipping=%d; ",
             lemma_reports()[n - 1].arc_path.name.c_str(), v.crossings, v.layout_overlap_area,
             v.left_C, v.unzipping);
    if (v.crossings != 0 || !(v.layout_overlap_area < 1e-9) || !v.left_C || v.unzipping) ok = false;
  }
  return {ok, d};
}

Outcome criterion5() {
  const LemmaReport& r = lemma_reports()[3];
  const MeasuredAngle& a = r.angles.at(0);
  const double v = rad2deg(a.value);
  // stop 2 is a3; "near" means within a tenth of the base side
  const double dist = r.crossing_distance.empty() ? 1e9 : r.crossing_distance.at(2);
  const bool ok = v >= 85.0 && v <= 95.0 && std::abs(rad2deg(a.budget) - 60.0) < 1.0 &&
                  r.arc_verdict.crossings >= 1 && dist < 0.1;
  return {ok, fmt("angle at a2=%.3f deg budget=%.2f deg; crossings=%d, nearest to a3 at %.4f", v,
                  rad2deg(a.budget), r.arc_verdict.crossings, dist)};
}

Outcome criterion6() {
  const Cap cap = build_cap(p_star());
  const CutPath path =
      extend_path_over_base(lemma_arc_path(cap.surface, cap.labels, lemma_path_type(1)), cap.labels);
  const Surface closed = close_with_base(cap.surface, cap.labels);
  const Verdict v = check_unzipping(closed, path);
  const bool ok = v.developed && v.layout_overlap_area < 1e-9 && v.pieces == 1 && v.unzipping;
  return {ok, fmt("area=%.2e pieces=%d crossings=%d unzipping=%d", v.layout_overlap_area, v.pieces,
                  v.crossings, v.unzipping)};
}

Outcome criterion7() {
  double secs = 0.0;
  const SweepResult& s = acceptance_sweep(&secs);
  std::size_t verdicts = 0;
  for (const auto& c : s.cells) verdicts += c.entries.size();
  const bool ok = s.cells.size() == 75 && s.skipped == 0 && s.unzippings == 0 &&
                  verdicts == 75 * 4 * 2 && secs < 60.0;
  return {ok, fmt("cells=%zu verdicts=%zu unzippings=%d skipped=%d asymmetric=%d time=%.2f s",
                  s.cells.size(), verdicts, s.unzippings, s.skipped, s.asymmetric, secs)};
}

Outcome criterion8() {
  const Cap cap = build_cap(p_star());
  const Point2 a1 = project_xy(cap.surface.vertex(cap.labels.a[0]));
  const Point2 c = project_xy(cap.surface.vertex(cap.labels.c));
  const double grid[] = {0.5, 1.0, 2.0, 5.0, 10.0};
  double lo = 1e9, hi = -1e9;
  for (double wa : grid) {
    for (double wc : grid) {
      auto gap = [&](double s) {
        const double w1 = deg2rad(wa) * s, w2 = deg2rad(wc) * s;
        return distance(combined_center_exact(w1, a1, w2, c), combined_center_approx(w1, a1, w2, c));
      };
      const double ratio = gap(1.0) / gap(0.5);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  return {lo >= 1.8 && hi <= 2.2, fmt("gap ratio on halving in [%.4f, %.4f] over 25 cells", lo, hi)};
}

Outcome criterion9() {
  std::mt19937 rng(20240901);
  std::vector<std::pair<Cap, CutPath>> bases;
  for (double e : {0.1, 0.05}) {
    const Cap cap = build_cap(solve_params_for_curvatures(deg2rad(5.0), deg2rad(10.0), e));
    for (const auto& p : fixture_paths(cap)) bases.push_back({cap, p});
  }
  double worst = 0.0;
  int done = 0, failed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& [cap, base] = bases[trial % bases.size()];
    try {
      const Development d0 = develop_on_cap(cap, base);
      const Development d1 = develop_on_cap(cap, wiggle(base, rng, 0.01));
      for (std::size_t i = 0; i < base.stops.size(); ++i) {
        worst = std::max(worst, distance(d0.R.image(i), d1.R.image(i)));
        worst = std::max(worst, distance(d0.L.image(i), d1.L.image(i)));
      }
      ++done;
    } catch (const GeometryError&) {
      ++failed;
    }
  }
  return {done == 100 && worst <= 1e-9,
          fmt("wiggles developed=%d failed=%d, largest image shift=%.2e", done, failed, worst)};
}

// Distances from u_i sampled along each later segment must never decrease.
bool dense_monotone(const std::vector<Point2>& c) {
  const int samples = 1000;
  for (std::size_t i = 0; i < c.size(); ++i) {
    double last = 0.0;
    for (std::size_t j = i; j + 1 < c.size(); ++j) {
      for (int k = 1; k <= samples; ++k) {
        const Point2 p = c[j] + (c[j + 1] - c[j]) * (static_cast<double>(k) / samples);
        const double r = distance(p, c[i]);
        if (r < last - 1e-12) return false;
        last = std::max(last, r);
      }
    }
  }
  return true;
}

Outcome criterion10() {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> turn(-deg2rad(110.0), deg2rad(110.0));
  std::uniform_real_distribution<double> len(0.1, 1.0);
  std::uniform_int_distribution<int> npts(3, 7);
  int agree = 0, rm = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<Point2> c{{0.0, 0.0}};
    double h = 0.0;
    const int n = npts(rng);
    for (int k = 1; k < n; ++k) {
      h += turn(rng) * (t % 2 ? 0.3 : 1.0);
      c.push_back(c.back() + Point2{std::cos(h), std::sin(h)} * len(rng));
    }
    const bool fast = radially_monotone(c).monotone;
    if (fast == dense_monotone(c)) ++agree;
    if (fast) ++rm;
  }
  int both = 0, violations = 0;
  const auto devs = developments(true);
  for (const auto& d : devs) {
    if (radially_monotone(d.R).monotone && radially_monotone(d.L).monotone) {
      ++both;
      if (chains_cross(d).chains_cross) ++violations;
    }
  }
  const bool ok = agree == 1000 && both > 0 && violations == 0;
  return {ok, fmt("oracle agreement %d/1000 (%d monotone); fixtures=%zu, both RM=%d, crossing "
                  "among them=%d",
                  agree, rm, devs.size(), both, violations)};
}

Outcome criterion11() {
  const std::string dir = std::string(CAPZIP_DATA_DIR) + "/solids/";
  bool ok = true;
  std::string d;
  const Surface rd = read_obj_file(dir + "rhombic_dodecahedron.obj");
  const auto rd_paths = hamiltonian_paths(Skeleton::of(rd), 1000000);
  d += fmt("rhombic_dodecahedron paths=%zu; ", rd_paths.size());
  if (!rd_paths.empty()) ok = false;
  for (const char* name : {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"}) {
    const Surface s = read_obj_file(dir + name + ".obj");
    const EdgeUnzipSearch r = find_edge_unzipping(s, 200);
    const bool found = !r.first_unzipping.empty() && r.first_result.verdict.layout_overlap_area < 1e-9 &&
                       r.first_result.verdict.pieces == 1;
    d += fmt("%s=%s ", name, found ? "unzips" : "none");
    if (!found) ok = false;
  }
  return {ok, d};
}

Outcome criterion12() {
  const int d8 = min_cut_degree(8 * kPi + 0.01), d4 = min_cut_degree(4 * kPi + 0.01);
  return {d8 == 5 && d4 == 3, fmt("min_cut_degree(8pi+0.01)=%d min_cut_degree(4pi+0.01)=%d", d8, d4)};
}

Outcome criterion13() {
  double worst = 0.0;
  int n = 0;
  auto take = [&](const Development& d) {
    worst = std::max(worst, oracle_gap(d));
    ++n;
  };
  for (const auto& r : lemma_reports()) {
    take(r.straight);
    take(r.arc);
  }
  take(closed_fixture());
  for (const auto& d : developments(false)) take(d);
  return {worst <= 1e-9, fmt("developments=%d, largest chain/layout gap=%.2e", n, worst)};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4,  criterion5,  criterion6, criterion7,
      criterion8, criterion9, criterion10, criterion11, criterion12, criterion13};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
