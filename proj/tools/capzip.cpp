// capzip command-line interface.
//
// Exit codes: 0 success (for `check`: the path is an unzipping), 1
// computation or input error, 2 usage error, 3 `check` found no unzipping.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "capzip/analysis.hpp"
#include "capzip/cap.hpp"
#include "capzip/cutpath.hpp"
#include "capzip/development.hpp"
#include "capzip/edge_unzip.hpp"
#include "capzip/errors.hpp"
#include "capzip/mesh_io.hpp"
#include "capzip/render.hpp"
#include "capzip/search.hpp"
#include "json.hpp"

using namespace capzip;
using nlohmann::json;

namespace {

struct CapInput {
  double eps = 0.1;
  double za = 0.02;
  double zc = 0.1;
  std::optional<double> wa;  // degrees
  std::optional<double> wc;

  void add_to(CLI::App* app) {
    app->add_option("--eps", eps, "apron offset epsilon")->capture_default_str();
    app->add_option("--za", za, "height of the a vertices")->capture_default_str();
    app->add_option("--zc", zc, "height of the apex c")->capture_default_str();
    app->add_option("--wa", wa, "target curvature at the a vertices (degrees)");
    app->add_option("--wc", wc, "target curvature at c (degrees)");
  }

  CapParams params() const {
    if (wa.has_value() != wc.has_value()) throw ParameterError("--wa and --wc go together");
    if (wa) return solve_params_for_curvatures(deg2rad(*wa), deg2rad(*wc), eps);
    CapParams p{eps, za, zc};
    p.validate();
    return p;
  }
};

struct PathInput {
  std::string file;
  std::string type = "acaab";
  std::string strategy = "straight";
  bool closed = false;

  void add_to(CLI::App* app) {
    app->add_option("--path", file, "cut path JSON (overrides --type/--strategy)");
    app->add_option("--type", type, "cut type: caaab, acaab, aacab or aaacb")->capture_default_str();
    app->add_option("--strategy", strategy, "straight or lemma-arc")->capture_default_str();
    app->add_flag("--closed", closed,
                  "close the cap with its base and extend the path over the base edges");
  }

  CutPath make(const Cap& cap) const {
    CutPath p;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw ParseError("cannot open " + file);
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw ParseError(file + ": " + e.what());
      }
      p = cut_path_from_json(j, &cap.labels);
    } else {
      PathType t;
      const CutType ct = cut_type_from_string(type);
      for (const auto& c : enumerate_cut_types()) {
        if (c.type == ct) {
          t = c;
          break;
        }
      }
      p = strategy_from_string(strategy) == Strategy::Straight
              ? straight_path(cap.surface, cap.labels, t)
              : lemma_arc_path(cap.surface, cap.labels, t);
    }
    if (closed) p = extend_path_over_base(p, cap.labels);
    return p;
  }
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex cap un-unzippability engine"};
  app.require_subcommand(1);

  CapInput cap_in;
  PathInput path_in;

  auto* build = app.add_subcommand("build-cap", "build the cap and report its curvatures");
  std::string obj_out, json_out;
  cap_in.add_to(build);
  build->add_option("--obj", obj_out, "write the mesh as OBJ");
  build->add_option("--json", json_out, "write the report here instead of stdout");

  auto* develop = app.add_subcommand("develop", "develop a cut path into the plane");
  std::string dev_json, dev_svg;
  CapInput dev_cap;
  PathInput dev_path;
  dev_cap.add_to(develop);
  dev_path.add_to(develop);
  develop->add_option("--json", dev_json, "development JSON output (default stdout)");
  develop->add_option("--svg", dev_svg, "SVG drawing of the development");

  auto* check = app.add_subcommand("check", "check whether a cut path is an unzipping");
  CapInput chk_cap;
  PathInput chk_path;
  chk_cap.add_to(check);
  chk_path.add_to(check);

  auto* lemma = app.add_subcommand("lemma", "run the scenario for one of the four cut types");
  int lemma_no = 1;
  bool lemma_devs = false;
  CapInput lem_cap;
  lemma->add_option("n", lemma_no, "1 acaab, 2 caaab, 3 aacab, 4 aaacb")->required()->check(
      CLI::Range(1, 4));
  lem_cap.add_to(lemma);
  lemma->add_flag("--developments", lemma_devs, "include the full developments");

  auto* sweep_cmd = app.add_subcommand("sweep", "sweep the curvature and apron grid");
  std::string sweep_cfg, sweep_json, sweep_csv_out, sweep_svg;
  int workers = 0;
  bool no_symmetry = false;
  sweep_cmd->add_option("--config", sweep_cfg, "grid JSON (default: the acceptance grid)");
  sweep_cmd->add_option("--workers", workers, "worker threads (0: all cores)");
  sweep_cmd->add_flag("--no-symmetry", no_symmetry, "skip the relabelling symmetry check");
  sweep_cmd->add_option("--json", sweep_json, "result JSON (default stdout)");
  sweep_cmd->add_option("--csv", sweep_csv_out, "result CSV");
  sweep_cmd->add_option("--svg", sweep_svg, "heatmap SVG");

  auto* edge = app.add_subcommand("edge-unzip", "search Hamiltonian edge unfoldings of a solid");
  std::string edge_obj;
  std::size_t edge_limit = 1000;
  edge->add_option("obj", edge_obj, "closed polyhedron as OBJ")->required();
  edge->add_option("--limit", edge_limit, "maximum Hamiltonian paths to try")->capture_default_str();

  auto* render = app.add_subcommand("render", "render a named drawing as SVG");
  std::string figure, render_out;
  bool list = false;
  CapInput ren_cap;
  ren_cap.wa = 5.0;
  ren_cap.wc = 10.0;
  render->add_option("--figure", figure, "drawing name (see --list)");
  render->add_flag("--list", list, "list drawing names");
  render->add_option("--out", render_out, "output file (default stdout)");
  ren_cap.add_to(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      const Cap cap = build_cap(cap_in.params());
      if (!obj_out.empty()) write_text(obj_out, write_obj(cap.surface, "capzip cap"));
      write_text(json_out, dump(cap_to_json(cap)));
    } else if (develop->parsed()) {
      const Cap cap = build_cap(dev_cap.params());
      const CutPath path = dev_path.make(cap);
      const Development d = dev_path.closed ? develop_cut(close_with_base(cap.surface, cap.labels), path)
                                            : develop_on_cap(cap, path);
      json j = to_json(d, &cap.labels);
      const OverlapReport rep = overlap_report(d);
      j["crossings"] = static_cast<int>(rep.crossings.size());
      j["layout_overlap_area"] = rep.layout_overlap_area;
      if (d.has_layout) {
        try {
          j["oracle_gap"] = oracle_gap(d);
        } catch (const GeometryError&) {
          j["oracle_gap"] = nullptr;
        }
      }
      write_text(dev_json, dump(j));
      if (!dev_svg.empty()) {
        RenderOptions opt;
        opt.stop_names = stop_names(path, cap.labels);
        opt.title = path.name;
        write_text(dev_svg, render_development(d, opt));
      }
    } else if (check->parsed()) {
      const Cap cap = build_cap(chk_cap.params());
      const CutPath path = chk_path.make(cap);
      CheckOptions opt;
      Verdict v;
      if (chk_path.closed) {
        v = check_unzipping(close_with_base(cap.surface, cap.labels), path, opt);
      } else {
        v = check_unzipping(cap, path, opt);
      }
      json j = to_json(v);
      j["path"] = to_json(path, &cap.labels);
      write_text("", dump(j));
      return v.unzipping ? 0 : 3;
    } else if (lemma->parsed()) {
      if (!lem_cap.wa && !lem_cap.wc) {
        lem_cap.wa = 5.0;
        lem_cap.wc = 10.0;
      }
      const LemmaReport r = run_lemma_scenario(lemma_no, lem_cap.params());
      write_text("", dump(to_json(r, lemma_devs)));
    } else if (sweep_cmd->parsed()) {
      SweepGrid g = default_sweep_grid();
      if (!sweep_cfg.empty()) {
        std::ifstream in(sweep_cfg);
        if (!in) throw ParseError("cannot open " + sweep_cfg);
        json j;
        try {
          in >> j;
        } catch (const json::exception& e) {
          throw ParseError(sweep_cfg + ": " + e.what());
        }
        g = sweep_grid_from_json(j);
      }
      if (workers > 0) g.workers = workers;
      if (no_symmetry) g.check_symmetry = false;
      const auto t0 = std::chrono::steady_clock::now();
      const SweepResult r = sweep(g);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::fprintf(stderr, "sweep: %zu cells, %d unzippings, %d skipped, %.2f s\n",
                   r.cells.size(), r.unzippings, r.skipped, secs);
      write_text(sweep_json, dump(to_json(r)));
      if (!sweep_csv_out.empty()) write_text(sweep_csv_out, sweep_csv(r));
      if (!sweep_svg.empty()) write_text(sweep_svg, render_sweep(r));
    } else if (edge->parsed()) {
      const Surface s = read_obj_file(edge_obj);
      if (!s.is_closed()) throw ParameterError("edge-unzip needs a closed polyhedron");
      const EdgeUnzipSearch r = find_edge_unzipping(s, edge_limit);
      json j = to_json(r);
      j["three_connected"] = Skeleton::of(s).three_connected();
      write_text("", dump(j));
    } else if (render->parsed()) {
      if (list) {
        for (const auto& n : figure_names()) std::cout << n << "\n";
        return 0;
      }
      if (figure.empty()) {
        std::cerr << "render: --figure or --list is required\n";
        return 2;
      }
      write_text(render_out, render_figure(figure, ren_cap.params()));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
