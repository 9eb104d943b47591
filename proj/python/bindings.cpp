#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "capzip/analysis.hpp"
#include "capzip/cap.hpp"
#include "capzip/cutpath.hpp"
#include "capzip/development.hpp"
#include "capzip/edge_unzip.hpp"
#include "capzip/errors.hpp"
#include "capzip/mesh_io.hpp"
#include "capzip/render.hpp"
#include "capzip/search.hpp"

namespace py = pybind11;
using namespace capzip;

// Results cross the boundary as JSON text; the Python package decodes them.

namespace {

PathType type_named(const std::string& name) {
  const CutType t = cut_type_from_string(name);
  for (const auto& p : enumerate_cut_types()) {
    if (p.type == t) return p;
  }
  throw ParameterError("unknown cut type " + name);
}

CutPath make_path(const Cap& cap, const std::string& type, const std::string& strategy,
                  bool closed, const std::string& path_json) {
  CutPath p;
  if (!path_json.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(path_json);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
    p = cut_path_from_json(j, &cap.labels);
  } else if (strategy_from_string(strategy) == Strategy::Straight) {
    p = straight_path(cap.surface, cap.labels, type_named(type));
  } else {
    p = lemma_arc_path(cap.surface, cap.labels, type_named(type));
  }
  if (closed) p = extend_path_over_base(p, cap.labels);
  return p;
}

std::string check(const CapParams& params, const std::string& type, const std::string& strategy,
                  bool closed, const std::string& path_json) {
  const Cap cap = build_cap(params);
  const CutPath p = make_path(cap, type, strategy, closed, path_json);
  const Verdict v = closed ? check_unzipping(close_with_base(cap.surface, cap.labels), p)
                           : check_unzipping(cap, p);
  nlohmann::json j = to_json(v);
  j["path"] = to_json(p, &cap.labels);
  return j.dump();
}

std::string develop(const CapParams& params, const std::string& type, const std::string& strategy,
                    bool closed, const std::string& path_json) {
  const Cap cap = build_cap(params);
  const CutPath p = make_path(cap, type, strategy, closed, path_json);
  const Development d = closed ? develop_cut(close_with_base(cap.surface, cap.labels), p)
                               : develop_on_cap(cap, p);
  nlohmann::json j = to_json(d, &cap.labels);
  const OverlapReport r = overlap_report(d);
  j["crossings"] = static_cast<int>(r.crossings.size());
  j["layout_overlap_area"] = r.layout_overlap_area;
  j["oracle_gap"] = nullptr;
  if (d.has_layout) {
    try {
      j["oracle_gap"] = oracle_gap(d);
    } catch (const GeometryError&) {
    }
  }
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "convex cap unzipping engine";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<GeometryError>(m, "GeometryError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<CapParams>(m, "CapParams")
      .def(py::init([](double eps, double za, double zc) { return CapParams{eps, za, zc}; }),
           py::arg("epsilon") = 0.1, py::arg("z_a") = 0.02, py::arg("z_c") = 0.1)
      .def_readwrite("epsilon", &CapParams::epsilon)
      .def_readwrite("z_a", &CapParams::z_a)
      .def_readwrite("z_c", &CapParams::z_c)
      .def("__repr__", [](const CapParams& p) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "CapParams(epsilon=%.17g, z_a=%.17g, z_c=%.17g)", p.epsilon,
                      p.z_a, p.z_c);
        return std::string(buf);
      });

  m.def("solve_params", [](double wa_deg, double wc_deg, double eps) {
    return solve_params_for_curvatures(deg2rad(wa_deg), deg2rad(wc_deg), eps);
  }, py::arg("omega_a_deg"), py::arg("omega_c_deg"), py::arg("epsilon"));

  m.def("cap_json", [](const CapParams& p) { return cap_to_json(build_cap(p)).dump(); });
  m.def("cap_obj", [](const CapParams& p) { return write_obj(build_cap(p).surface, "capzip cap"); });

  m.def("check_json", &check, py::arg("params"), py::arg("type") = "acaab",
        py::arg("strategy") = "straight", py::arg("closed") = false, py::arg("path_json") = "");
  m.def("develop_json", &develop, py::arg("params"), py::arg("type") = "acaab",
        py::arg("strategy") = "straight", py::arg("closed") = false, py::arg("path_json") = "");

  m.def("lemma_json", [](int n, const CapParams& p) { return to_json(run_lemma_scenario(n, p)).dump(); });

  m.def("sweep_json", [](const std::string& config, int workers) {
    SweepGrid g = default_sweep_grid();
    if (!config.empty()) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(config);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
      }
      g = sweep_grid_from_json(j);
    }
    if (workers > 0) g.workers = workers;
    SweepResult r;
    {
      py::gil_scoped_release release;
      r = sweep(g);
    }
    return to_json(r).dump();
  }, py::arg("config") = "", py::arg("workers") = 0);

  m.def("edge_unzip_json", [](const std::string& obj_path, std::size_t limit) {
    return to_json(find_edge_unzipping(read_obj_file(obj_path), limit)).dump();
  }, py::arg("obj_path"), py::arg("limit") = 1000);

  m.def("hamiltonian_path_count", [](const std::string& obj_path, std::size_t limit) {
    return hamiltonian_paths(Skeleton::of(read_obj_file(obj_path)), limit).size();
  }, py::arg("obj_path"), py::arg("limit") = 1000000);

  m.def("radially_monotone", [](const std::vector<std::pair<double, double>>& pts) {
    std::vector<Point2> c;
    for (const auto& [x, y] : pts) c.push_back({x, y});
    return radially_monotone(c).monotone;
  });

  m.def("min_cut_degree", &min_cut_degree, py::arg("theta"));
  m.def("figure_names", &figure_names);
  m.def("render_figure", &render_figure, py::arg("name"), py::arg("params"));
}
