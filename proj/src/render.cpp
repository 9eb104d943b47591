#include "capzip/render.hpp"

#include <cstdio>

#include "capzip/errors.hpp"

namespace capzip {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

class Svg {
 public:
  void include(const Point2& p) { box_.expand(p); }

  void polyline(const std::vector<Point2>& pts, const std::string& cls, bool closed = false) {
    if (pts.size() < 2) return;
    for (const auto& p : pts) include(p);
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      d += (i == 0 ? "M" : " L");
      d += num(pts[i].x) + " " + num(-pts[i].y);
    }
    if (closed) d += " Z";
    body_ += "<path class=\"" + cls + "\" d=\"" + d + "\"/>\n";
  }

  void dot(const Point2& p, const std::string& cls, double r) {
    include(p);
    body_ += "<circle class=\"" + cls + "\" cx=\"" + num(p.x) + "\" cy=\"" + num(-p.y) +
             "\" r=\"" + num(r) + "\"/>\n";
  }

  void text(const Point2& p, const std::string& s, const std::string& cls) {
    include(p);
    body_ += "<text class=\"" + cls + "\" x=\"" + num(p.x) + "\" y=\"" + num(-p.y) + "\">" +
             escape(s) + "</text>\n";
  }

  void rect(const Point2& lo, double w, double h, const std::string& cls) {
    include(lo);
    include(lo + Point2{w, h});
    body_ += "<rect class=\"" + cls + "\" x=\"" + num(lo.x) + "\" y=\"" + num(-(lo.y + h)) +
             "\" width=\"" + num(w) + "\" height=\"" + num(h) + "\"/>\n";
  }

  std::string finish(const RenderOptions& opt, const std::string& style) const {
    Box2 b = box_;
    if (b.empty()) {
      b.expand({0.0, 0.0});
      b.expand({1.0, 1.0});
    }
    const double w = b.hi.x - b.lo.x, h = b.hi.y - b.lo.y;
    const double m = opt.margin * std::max({w, h, 1e-9}) + opt.font_size;
    const double x0 = b.lo.x - m, y0 = -b.hi.y - m, vw = w + 2 * m, vh = h + 2 * m;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(x0) + " " +
           num(y0) + " " + num(vw) + " " + num(vh) + "\" width=\"800\" height=\"" +
           num(800.0 * vh / vw) + "\">\n";
    if (!opt.title.empty()) out += "<title>" + escape(opt.title) + "</title>\n";
    out += "<style>\n" + style + "</style>\n";
    out += body_;
    out += "</svg>\n";
    return out;
  }

  const Box2& box() const { return box_; }

 private:
  Box2 box_;
  std::string body_;
};

std::string base_style(const RenderOptions& opt) {
  const std::string sw = num(opt.stroke);
  return ".chain-r{fill:none;stroke:#c0392b;stroke-width:" + sw + "}\n" +
         ".chain-l{fill:none;stroke:#2471a3;stroke-width:" + sw + "}\n" +
         ".face{fill:#f4ecd8;fill-opacity:0.6;stroke:#999;stroke-width:" + num(opt.stroke / 2) +
         "}\n" + ".ext{fill:#e8f4e8;fill-opacity:0.6;stroke:#9b9;stroke-width:" +
         num(opt.stroke / 2) + "}\n" + ".edge{fill:none;stroke:#555;stroke-width:" +
         num(opt.stroke / 2) + "}\n" + ".cut{fill:none;stroke:#000;stroke-width:" + sw + "}\n" +
         ".mark{fill:#000}\n.cross{fill:#f1c40f;stroke:#000;stroke-width:" + num(opt.stroke / 4) +
         "}\n" + "text{font-family:sans-serif;font-size:" + num(opt.font_size) + "px}\n";
}

}  // namespace

std::string render_development(const Development& d, const RenderOptions& opt) {
  Svg svg;
  if (opt.show_layout && d.has_layout) {
    for (const auto& r : d.layout.regions) {
      if (!r.active || !r.placed) continue;
      svg.polyline(r.placed_poly(), r.counted ? "face" : "ext", true);
    }
  }
  svg.polyline(d.R.points, "chain-r");
  svg.polyline(d.L.points, "chain-l");
  for (const auto& c : chains_cross(d).crossings) svg.dot(c.point, "cross", opt.stroke * 2.5);
  for (std::size_t k = 0; k < d.R.marks.size(); ++k) {
    const Point2 pr = d.R.image(static_cast<int>(k));
    const Point2 pl = d.L.image(static_cast<int>(k));
    svg.dot(pr, "mark", opt.stroke * 1.5);
    svg.dot(pl, "mark", opt.stroke * 1.5);
    if (opt.show_labels && k < opt.stop_names.size()) {
      const Point2 off{opt.font_size * 0.3, opt.font_size * 0.3};
      if (distance(pr, pl) < 1e-9) {
        svg.text(pr + off, opt.stop_names[k], "label");
      } else {
        svg.text(pr + off, opt.stop_names[k] + "'", "label");
        svg.text(pl + off, opt.stop_names[k] + "''", "label");
      }
    }
  }
  return svg.finish(opt, base_style(opt));
}

std::string render_projection(const Surface& s, const CapLabels& labels,
                              const std::vector<Point3>& path, const RenderOptions& opt) {
  Svg svg;
  for (int f = 0; f < s.num_faces(); ++f) {
    std::vector<Point2> poly;
    for (int v : s.face(f)) poly.push_back(project_xy(s.vertex(v)));
    svg.polyline(poly, s.tag(f) == kExtensionTag ? "ext" : "face", true);
  }
  if (!path.empty()) {
    std::vector<Point2> pts;
    for (const auto& p : path) pts.push_back(project_xy(p));
    svg.polyline(pts, "cut");
  }
  if (opt.show_labels) {
    std::vector<int> named{labels.b[0], labels.b[1], labels.b[2], labels.a[0],
                           labels.a[1], labels.a[2], labels.c};
    for (int v : named) {
      if (v >= s.num_vertices()) continue;
      const Point2 p = project_xy(s.vertex(v));
      svg.dot(p, "mark", opt.stroke * 1.5);
      svg.text(p + Point2{opt.font_size * 0.3, opt.font_size * 0.3}, labels.name(v), "label");
    }
  }
  return svg.finish(opt, base_style(opt));
}

std::string render_sweep(const SweepResult& r, const RenderOptions& opt) {
  if (r.cells.empty()) throw ParameterError("cannot render an empty sweep");
  // distinct axis values in order of appearance
  std::vector<double> eps, wa, wc;
  auto add = [](std::vector<double>& v, double x) {
    for (double y : v) {
      if (y == x) return;
    }
    v.push_back(x);
  };
  for (const auto& c : r.cells) {
    add(eps, c.epsilon);
    add(wa, c.omega_a);
    add(wc, c.omega_c);
  }
  auto index = [](const std::vector<double>& v, double x) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == x) return static_cast<int>(i);
    }
    return -1;
  };
  Svg svg;
  const double cell = 1.0, gap = 1.5;
  const double panel = cell * static_cast<double>(wa.size()) + gap;
  const double fs = 0.3;
  for (const auto& c : r.cells) {
    const int e = index(eps, c.epsilon), i = index(wa, c.omega_a), j = index(wc, c.omega_c);
    std::string cls = "not-unzipping";
    if (c.skipped) {
      cls = "skipped";
    } else {
      for (const auto& en : c.entries) {
        if (en.verdict.unzipping) cls = "unzipping";
      }
    }
    svg.rect({e * panel + i * cell, j * cell}, cell, cell, cls);
  }
  char buf[64];
  for (std::size_t e = 0; e < eps.size(); ++e) {
    std::snprintf(buf, sizeof buf, "eps = %g", eps[e]);
    svg.text({e * panel, wc.size() * cell + 0.3}, buf, "axis");
    for (std::size_t i = 0; i < wa.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%g", rad2deg(wa[i]));
      svg.text({e * panel + i * cell + 0.2, -0.4}, buf, "axis");
    }
  }
  for (std::size_t j = 0; j < wc.size(); ++j) {
    std::snprintf(buf, sizeof buf, "%g", rad2deg(wc[j]));
    svg.text({-0.9, j * cell + 0.4}, buf, "axis");
  }
  svg.text({0.0, -1.0}, "omega_a (deg) across, omega_c (deg) up", "axis");
  const double ly = -1.8;
  const char* classes[] = {"not-unzipping", "unzipping", "skipped"};
  for (int k = 0; k < 3; ++k) {
    svg.rect({k * 4.0, ly - 0.5}, 0.5, 0.5, std::string("legend ") + classes[k]);
    svg.text({k * 4.0 + 0.7, ly - 0.4}, classes[k], "axis");
  }
  RenderOptions o = opt;
  o.margin = 0.02;
  o.font_size = fs;
  const std::string style =
      ".not-unzipping{fill:#5d6d7e;stroke:#fff;stroke-width:0.03}\n"
      ".unzipping{fill:#e74c3c;stroke:#fff;stroke-width:0.03}\n"
      ".skipped{fill:#d5d8dc;stroke:#fff;stroke-width:0.03}\n"
      "text{font-family:sans-serif;font-size:0.3px}\n";
  return svg.finish(o, style);
}

std::vector<std::string> stop_names(const CutPath& p, const CapLabels& labels) {
  std::vector<std::string> names;
  for (const auto& s : p.stops) {
    if (s.kind == SurfacePoint::Kind::Vertex) {
      names.push_back(labels.name(s.vertex));
    } else if (s.kind == SurfacePoint::Kind::Edge) {
      names.push_back("b");
    } else {
      names.push_back("p");
    }
  }
  return names;
}

std::vector<std::string> figure_names() {
  std::vector<std::string> out{"cap-projection"};
  for (const auto& t : enumerate_cut_types()) {
    const std::string n = to_string(t.type);
    out.push_back(n + "-projection");
    out.push_back(n + "-straight");
    out.push_back(n + "-arc");
  }
  out.push_back("closed-unzipping");
  return out;
}

std::string render_figure(const std::string& name, const CapParams& params) {
  const Cap cap = build_cap(params);
  RenderOptions opt;
  opt.title = name;
  if (name == "cap-projection") return render_projection(cap.surface, cap.labels, {}, opt);
  if (name == "closed-unzipping") {
    const Surface P = close_with_base(cap.surface, cap.labels);
    const CutPath path = extend_path_over_base(
        lemma_arc_path(cap.surface, cap.labels, lemma_path_type(1)), cap.labels);
    const Development d = develop_cut(P, path);
    opt.stop_names = stop_names(path, cap.labels);
    return render_development(d, opt);
  }
  for (const auto& t : enumerate_cut_types()) {
    const std::string n = to_string(t.type);
    if (name != n + "-projection" && name != n + "-straight" && name != n + "-arc") continue;
    const bool arc = name == n + "-arc";
    const CutPath path = arc ? lemma_arc_path(cap.surface, cap.labels, t)
                             : straight_path(cap.surface, cap.labels, t);
    const Development d = develop_on_cap(cap, path);
    if (name == n + "-projection") {
      return render_projection(cap.surface, cap.labels, d.trace_points(), opt);
    }
    opt.stop_names = stop_names(path, cap.labels);
    return render_development(d, opt);
  }
  throw ParameterError("unknown figure '" + name + "'");
}

}  // namespace capzip
