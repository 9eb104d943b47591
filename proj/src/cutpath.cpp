#include "capzip/cutpath.hpp"

#include "capzip/errors.hpp"
#include "capzip/geodesic.hpp"

namespace capzip {

const char* to_string(CutType t) {
  switch (t) {
    case CutType::caaab:
      return "caaab";
    case CutType::acaab:
      return "acaab";
    case CutType::aacab:
      return "aacab";
    case CutType::aaacb:
      return "aaacb";
  }
  return "?";
}

CutType cut_type_from_string(const std::string& s) {
  for (CutType t : {CutType::caaab, CutType::acaab, CutType::aacab, CutType::aaacb}) {
    if (s == to_string(t)) return t;
  }
  throw ParameterError("unknown cut type '" + s + "'");
}

std::vector<PathType> enumerate_cut_types() {
  return {
      PathType{CutType::caaab, {1, 2, 0}, std::nullopt},
      PathType{CutType::acaab, {0, 1, 2}, std::nullopt},
      PathType{CutType::aacab, {0, 1, 2}, std::nullopt},
      PathType{CutType::aaacb, {0, 1, 2}, std::nullopt},
  };
}

ExitSpec default_exit(const PathType& t) {
  const auto& o = t.a_order;
  if (t.type == CutType::aaacb) return ExitSpec{ExitSpec::Kind::EdgePoint, o[2], o[0], 0.5};
  return ExitSpec{ExitSpec::Kind::Vertex, o[2], 0, 0.0};
}

std::vector<SurfacePoint> stops_for(const CapLabels& labels, const PathType& t) {
  std::array<bool, 3> seen{};
  for (int i : t.a_order) {
    if (i < 0 || i > 2 || seen[i]) throw ParameterError("a_order must be a permutation of 0,1,2");
    seen[i] = true;
  }
  const auto a = [&](int k) { return SurfacePoint::at_vertex(labels.a[t.a_order[k]]); };
  const SurfacePoint c = SurfacePoint::at_vertex(labels.c);
  std::vector<SurfacePoint> stops;
  switch (t.type) {
    case CutType::caaab:
      stops = {c, a(0), a(1), a(2)};
      break;
    case CutType::acaab:
      stops = {a(0), c, a(1), a(2)};
      break;
    case CutType::aacab:
      stops = {a(0), a(1), c, a(2)};
      break;
    case CutType::aaacb:
      stops = {a(0), a(1), a(2), c};
      break;
  }
  const ExitSpec e = t.exit.value_or(default_exit(t));
  if (e.b < 0 || e.b > 2 || e.b2 < 0 || e.b2 > 2) throw ParameterError("exit index out of range");
  if (e.kind == ExitSpec::Kind::Vertex) {
    stops.push_back(SurfacePoint::at_vertex(labels.b[e.b]));
  } else {
    if (e.b == e.b2) throw ParameterError("exit edge needs two distinct b vertices");
    stops.push_back(SurfacePoint::on_edge(labels.b[e.b], labels.b[e.b2], e.t));
  }
  return stops;
}

CutType classify_order(const CapLabels& labels, const std::vector<int>& order) {
  if (order.size() != 4) throw ParameterError("an order lists c and the three a's");
  int pos = -1;
  std::array<bool, 3> seen{};
  for (int i = 0; i < 4; ++i) {
    if (order[i] == labels.c) pos = i;
    const int ai = labels.a_index(order[i]);
    if (ai >= 0) seen[ai] = true;
  }
  if (pos < 0 || !(seen[0] && seen[1] && seen[2])) throw ParameterError("order must contain c and a1, a2, a3");
  static const CutType by_pos[] = {CutType::caaab, CutType::acaab, CutType::aacab,
                                   CutType::aaacb};
  return by_pos[pos];
}

SegmentGeom SegmentGeom::geodesic() { return SegmentGeom{}; }

SegmentGeom SegmentGeom::arc(ArcCenter center, int samples, ArcSweep sweep) {
  SegmentGeom g;
  g.kind = Kind::Arc;
  g.center = center;
  g.samples = samples;
  g.sweep = sweep;
  return g;
}

SegmentGeom SegmentGeom::polyline(std::vector<Point2> normalized_points) {
  SegmentGeom g;
  g.kind = Kind::Polyline;
  g.points = std::move(normalized_points);
  return g;
}

void SegmentGeom::validate() const {
  if (kind == Kind::Arc && samples < 16) throw ParameterError("arc needs at least 16 samples");
  if (kind == Kind::Polyline) {
    if (points.size() < 2) throw ParameterError("polyline needs at least two points");
    if (norm(points.front()) > 1e-12 || distance(points.back(), {1.0, 0.0}) > 1e-12) {
      throw ParameterError("polyline must run from (0,0) to (1,0)");
    }
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      for (std::size_t j = i + 2; j + 1 < points.size(); ++j) {
        const auto r = seg_intersect({points[i], points[i + 1]}, {points[j], points[j + 1]});
        if (r.kind != IntersectionKind::None) throw ParameterError("polyline is not simple");
      }
    }
  }
}

void CutPath::validate() const {
  if (stops.size() < 2) throw ParameterError("a cut path needs at least two stops");
  if (segments.size() + 1 != stops.size()) {
    throw ParameterError("a cut path needs one segment per consecutive stop pair");
  }
  for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
    if (stops[i].kind != SurfacePoint::Kind::Vertex) {
      throw ParameterError("only the last stop may lie off a vertex");
    }
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    segments[i].validate();
    if (segments[i].kind == SegmentGeom::Kind::Arc) {
      if (i == 0) throw ParameterError("the first segment cannot be an arc");
      const auto& c = segments[i].center;
      if (c.i < 0 || c.i > static_cast<int>(i) ||
          (c.kind == ArcCenter::Kind::Combined && (c.j < 0 || c.j > static_cast<int>(i)))) {
        throw ParameterError("arc center must refer to an earlier stop");
      }
    }
  }
}

CutPath straight_path(const Surface& s, const CapLabels& labels, const PathType& t) {
  CutPath p;
  p.name = to_string(t.type);
  p.stops = stops_for(labels, t);
  p.segments.assign(p.stops.size() - 1, SegmentGeom::geodesic());
  for (std::size_t i = 0; i + 1 < p.stops.size(); ++i) {
    geodesic_between(s, p.stops[i], p.stops[i + 1]);
  }
  return p;
}

CutPath arc_path(const Surface& s, const CapLabels& labels, const PathType& t,
                 const std::vector<std::pair<int, SegmentGeom>>& arcs) {
  CutPath p = straight_path(s, labels, t);
  for (const auto& [i, g] : arcs) {
    if (i < 0 || i >= p.num_segments()) throw ParameterError("arc segment index out of range");
    p.segments[i] = g;
  }
  p.validate();
  return p;
}

std::vector<std::pair<int, SegmentGeom>> lemma_arcs(const PathType& t) {
  const ArcCenter first{ArcCenter::Kind::StopImage, 0, 0};
  switch (t.type) {
    case CutType::acaab:
      return {{2, SegmentGeom::arc({ArcCenter::Kind::Combined, 0, 1})}};
    case CutType::caaab:
      return {{1, SegmentGeom::arc(first)}, {2, SegmentGeom::arc(first)}};
    case CutType::aacab:
      return {{1, SegmentGeom::arc(first)}};
    case CutType::aaacb:
      return {{1, SegmentGeom::arc(first)}};
  }
  return {};
}

CutPath lemma_arc_path(const Surface& s, const CapLabels& labels, const PathType& t) {
  CutPath p = arc_path(s, labels, t, lemma_arcs(t));
  p.name += "-arc";
  return p;
}

namespace {

int rotate_vertex(const CapLabels& l, int v, int shift) {
  const int ai = l.a_index(v);
  if (ai >= 0) return l.a[(ai + shift) % 3];
  const int bi = l.b_index(v);
  if (bi >= 0) return l.b[(bi + shift) % 3];
  return v;
}

}  // namespace

CutPath rotate_labels(const CutPath& p, const CapLabels& labels, int shift) {
  shift = ((shift % 3) + 3) % 3;
  CutPath out = p;
  for (auto& sp : out.stops) {
    if (sp.kind == SurfacePoint::Kind::Vertex) {
      sp.vertex = rotate_vertex(labels, sp.vertex, shift);
    } else if (sp.kind == SurfacePoint::Kind::Edge) {
      sp.u = rotate_vertex(labels, sp.u, shift);
      sp.v = rotate_vertex(labels, sp.v, shift);
    } else {
      throw ParameterError("cannot relabel a face point");
    }
  }
  return out;
}

nlohmann::json to_json(const SurfacePoint& p, const CapLabels* labels) {
  auto vname = [&](int v) -> nlohmann::json {
    if (labels) return labels->name(v);
    return v;
  };
  switch (p.kind) {
    case SurfacePoint::Kind::Vertex:
      return labels ? nlohmann::json(labels->name(p.vertex))
                    : nlohmann::json{{"vertex", p.vertex}};
    case SurfacePoint::Kind::Edge:
      return {{"edge", {vname(p.u), vname(p.v)}}, {"t", p.t}};
    case SurfacePoint::Kind::Face:
      return {{"face", p.face}, {"local", {p.local.x, p.local.y}}};
  }
  return nullptr;
}

SurfacePoint surface_point_from_json(const nlohmann::json& j, const CapLabels* labels) {
  auto vid = [&](const nlohmann::json& x) -> int {
    if (x.is_number_integer()) return x.get<int>();
    if (x.is_string()) {
      if (!labels) throw ParseError("vertex names need cap labels");
      try {
        return labels->id(x.get<std::string>());
      } catch (const ParameterError& e) {
        throw ParseError(e.what());
      }
    }
    throw ParseError("vertex must be a name or an integer id");
  };
  try {
    if (j.is_string() || j.is_number_integer()) return SurfacePoint::at_vertex(vid(j));
    if (j.contains("vertex")) return SurfacePoint::at_vertex(vid(j.at("vertex")));
    if (j.contains("edge")) {
      const auto& e = j.at("edge");
      return SurfacePoint::on_edge(vid(e.at(0)), vid(e.at(1)), j.value("t", 0.5));
    }
    if (j.contains("face")) {
      const auto& l = j.at("local");
      return SurfacePoint::in_face(j.at("face").get<int>(),
                                   {l.at(0).get<double>(), l.at(1).get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("surface point: ") + e.what());
  }
  throw ParseError("unrecognised surface point " + j.dump());
}

namespace {

const char* sweep_name(ArcSweep s) {
  switch (s) {
    case ArcSweep::Short:
      return "short";
    case ArcSweep::Ccw:
      return "ccw";
    case ArcSweep::Cw:
      return "cw";
  }
  return "short";
}

ArcSweep sweep_from(const std::string& s) {
  if (s == "short") return ArcSweep::Short;
  if (s == "ccw") return ArcSweep::Ccw;
  if (s == "cw") return ArcSweep::Cw;
  throw ParseError("unknown arc sweep '" + s + "'");
}

}  // namespace

nlohmann::json to_json(const CutPath& p, const CapLabels* labels) {
  nlohmann::json stops = nlohmann::json::array();
  for (const auto& s : p.stops) stops.push_back(to_json(s, labels));
  nlohmann::json segs = nlohmann::json::array();
  for (const auto& g : p.segments) {
    switch (g.kind) {
      case SegmentGeom::Kind::Geodesic:
        segs.push_back({{"kind", "geodesic"}});
        break;
      case SegmentGeom::Kind::Arc: {
        nlohmann::json c;
        if (g.center.kind == ArcCenter::Kind::StopImage) {
          c = {{"stop", g.center.i}};
        } else {
          c = {{"combined", {g.center.i, g.center.j}}};
        }
        segs.push_back({{"kind", "arc"},
                        {"center", c},
                        {"samples", g.samples},
                        {"sweep", sweep_name(g.sweep)}});
        break;
      }
      case SegmentGeom::Kind::Polyline: {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& q : g.points) pts.push_back({q.x, q.y});
        segs.push_back({{"kind", "polyline"}, {"points", pts}});
        break;
      }
    }
  }
  return {{"schema", "capzip.path/1"}, {"name", p.name}, {"stops", stops}, {"segments", segs}};
}

CutPath cut_path_from_json(const nlohmann::json& j, const CapLabels* labels) {
  CutPath p;
  try {
    p.name = j.value("name", std::string{});
    for (const auto& s : j.at("stops")) p.stops.push_back(surface_point_from_json(s, labels));
    if (j.contains("segments")) {
      for (const auto& g : j.at("segments")) {
        const std::string kind = g.value("kind", std::string("geodesic"));
        if (kind == "geodesic") {
          p.segments.push_back(SegmentGeom::geodesic());
        } else if (kind == "arc") {
          const auto& c = g.at("center");
          ArcCenter center;
          if (c.contains("stop")) {
            center = {ArcCenter::Kind::StopImage, c.at("stop").get<int>(), 0};
          } else {
            center = {ArcCenter::Kind::Combined, c.at("combined").at(0).get<int>(),
                      c.at("combined").at(1).get<int>()};
          }
          p.segments.push_back(SegmentGeom::arc(center, g.value("samples", 64),
                                                sweep_from(g.value("sweep", std::string("short")))));
        } else if (kind == "polyline") {
          std::vector<Point2> pts;
          for (const auto& q : g.at("points")) {
            pts.push_back({q.at(0).get<double>(), q.at(1).get<double>()});
          }
          p.segments.push_back(SegmentGeom::polyline(std::move(pts)));
        } else {
          throw ParseError("unknown segment kind '" + kind + "'");
        }
      }
    } else {
      p.segments.assign(p.stops.size() > 0 ? p.stops.size() - 1 : 0, SegmentGeom::geodesic());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cut path: ") + e.what());
  }
  p.validate();
  return p;
}

}  // namespace capzip
