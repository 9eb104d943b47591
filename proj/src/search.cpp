#include "capzip/search.hpp"

#include <atomic>
#include <algorithm>
#include <cstdio>
#include <limits>
#include <thread>

#include "capzip/errors.hpp"

namespace capzip {

const char* to_string(Strategy s) { return s == Strategy::Straight ? "straight" : "lemma-arc"; }

Strategy strategy_from_string(const std::string& s) {
  if (s == "straight") return Strategy::Straight;
  if (s == "lemma-arc" || s == "arc") return Strategy::LemmaArc;
  throw ParameterError("unknown strategy '" + s + "'");
}

PathType lemma_path_type(int lemma) {
  static const CutType by_lemma[] = {CutType::acaab, CutType::caaab, CutType::aacab,
                                     CutType::aaacb};
  if (lemma < 1 || lemma > 4) throw ParameterError("lemma must be 1, 2, 3 or 4");
  for (const auto& t : enumerate_cut_types()) {
    if (t.type == by_lemma[lemma - 1]) return t;
  }
  throw ParameterError("no template for lemma");
}

namespace {

int stop_vertex(const CutPath& p, int i) { return p.stops.at(i).vertex; }

MeasuredAngle departure_angle(const Cap& cap, const CutPath& p, const Development& d, int stop) {
  MeasuredAngle m;
  const auto& L = cap.labels;
  m.name = "departure at " + L.name(stop_vertex(p, stop));
  m.value = effective_turn_angle(d, ChainSide::R, stop, TurnTarget::Departure);
  m.budget = apron_turn_budget(cap, stop_vertex(p, stop - 1), stop_vertex(p, stop),
                               stop_vertex(p, stop + 1));
  return m;
}

}  // namespace

MeasuredAngle lemma1_angle(const Cap& cap) {
  const PathType t = lemma_path_type(1);
  const CutPath p = straight_path(cap.surface, cap.labels, t);
  DevelopOptions opt;
  opt.build_layout = false;
  const Development d = develop_cut(cap.surface, p, opt);
  MeasuredAngle m;
  const auto& L = cap.labels;
  m.name = L.name(stop_vertex(p, 1)) + "'" + L.name(stop_vertex(p, 2)) + "'" +
           L.name(stop_vertex(p, 2)) + "''";
  m.value = effective_turn_angle(d, ChainSide::R, 2, TurnTarget::OppositeImage);
  m.budget = apron_turn_budget(cap, stop_vertex(p, 1), stop_vertex(p, 2), stop_vertex(p, 3));
  return m;
}

LemmaReport run_lemma_scenario(int lemma, const CapParams& params) {
  LemmaReport r;
  r.lemma = lemma;
  r.params = params;
  r.type = lemma_path_type(lemma);
  const Cap cap = build_cap(params);
  r.straight_path = straight_path(cap.surface, cap.labels, r.type);
  r.arc_path = lemma_arc_path(cap.surface, cap.labels, r.type);
  r.straight = develop_on_cap(cap, r.straight_path);
  r.arc = develop_on_cap(cap, r.arc_path);
  CheckOptions opt;
  opt.labels = &cap.labels;
  r.straight_verdict = evaluate_verdict(cap.surface, r.straight_path, r.straight, opt);
  r.arc_verdict = evaluate_verdict(cap.surface, r.arc_path, r.arc, opt);
  switch (lemma) {
    case 1:
      r.angles.push_back(lemma1_angle(cap));
      r.angles.push_back(departure_angle(cap, r.arc_path, r.arc, 2));
      break;
    case 2:
      r.angles.push_back(departure_angle(cap, r.arc_path, r.arc, 1));
      r.angles.push_back(departure_angle(cap, r.arc_path, r.arc, 2));
      break;
    case 3:
    case 4:
      r.angles.push_back(departure_angle(cap, r.arc_path, r.arc, 1));
      break;
  }
  const OverlapReport rep = chains_cross(r.arc);
  if (!rep.crossings.empty()) {
    for (int k = 0; k < static_cast<int>(r.arc.R.marks.size()); ++k) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& c : rep.crossings) {
        best = std::min({best, distance(c.point, r.arc.R.image(k)),
                         distance(c.point, r.arc.L.image(k))});
      }
      r.crossing_distance.push_back(best);
    }
  }
  return r;
}

void SweepGrid::validate() const {
  if (omega_a.empty() || omega_c.empty() || epsilon.empty()) {
    throw ParameterError("sweep grid axes must be nonempty");
  }
  if (strategies.empty()) throw ParameterError("sweep needs at least one strategy");
  if (types.empty()) throw ParameterError("sweep needs at least one cut type");
  for (double w : omega_a) {
    if (!(w > 0.0 && w < deg2rad(30.0))) throw ParameterError("omega_a values must be in (0, 30) deg");
  }
  for (double w : omega_c) {
    if (!(w > 0.0 && w < deg2rad(30.0))) throw ParameterError("omega_c values must be in (0, 30) deg");
  }
  for (double e : epsilon) {
    if (!(e > 0.0)) throw ParameterError("epsilon values must be positive");
  }
  if (workers < 0) throw ParameterError("workers must be nonnegative");
}

SweepGrid default_sweep_grid() {
  SweepGrid g;
  for (double w : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    g.omega_a.push_back(deg2rad(w));
    g.omega_c.push_back(deg2rad(w));
  }
  g.epsilon = {0.002, 0.01, 0.05};
  return g;
}

namespace {

bool same_verdict(const Verdict& a, const Verdict& b) {
  return a.unzipping == b.unzipping && a.reasons == b.reasons && a.crossings == b.crossings;
}

CutPath make_path(const Cap& cap, const PathType& t, Strategy s) {
  return s == Strategy::Straight ? straight_path(cap.surface, cap.labels, t)
                                 : lemma_arc_path(cap.surface, cap.labels, t);
}

}  // namespace

SweepCell sweep_cell(double omega_a, double omega_c, double epsilon, const SweepGrid& grid) {
  SweepCell cell;
  cell.omega_a = omega_a;
  cell.omega_c = omega_c;
  cell.epsilon = epsilon;
  Cap cap;
  try {
    cell.params = solve_params_for_curvatures(omega_a, omega_c, epsilon);
    cap = build_cap(cell.params);
    cell.lemma1 = lemma1_angle(cap);
  } catch (const Error& e) {
    cell.skipped = true;
    cell.skip_reason = e.what();
    return cell;
  }
  for (CutType type : grid.types) {
    PathType t;
    for (const auto& cand : enumerate_cut_types()) {
      if (cand.type == type) t = cand;
    }
    for (Strategy s : grid.strategies) {
      SweepEntry e;
      e.type = type;
      e.strategy = s;
      CutPath path;
      try {
        path = make_path(cap, t, s);
      } catch (const Error& err) {
        e.verdict.reasons.push_back(std::string("path-construction-failed: ") + err.what());
        cell.entries.push_back(e);
        continue;
      }
      e.verdict = check_unzipping(cap, path);
      if (grid.check_symmetry) {
        for (int shift = 1; shift <= 2; ++shift) {
          const Verdict v = check_unzipping(cap, rotate_labels(path, cap.labels, shift));
          if (!same_verdict(v, e.verdict)) e.symmetric = false;
        }
      }
      cell.entries.push_back(std::move(e));
    }
  }
  return cell;
}

SweepResult sweep(const SweepGrid& grid) {
  grid.validate();
  struct Job {
    double wa, wc, eps;
  };
  std::vector<Job> jobs;
  for (double e : grid.epsilon) {
    for (double wa : grid.omega_a) {
      for (double wc : grid.omega_c) jobs.push_back({wa, wc, e});
    }
  }
  SweepResult res;
  res.cells.resize(jobs.size());
  int workers = grid.workers > 0 ? grid.workers
                                 : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min<int>(workers, static_cast<int>(jobs.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      res.cells[i] = sweep_cell(jobs[i].wa, jobs[i].wc, jobs[i].eps, grid);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& c : res.cells) {
    if (c.skipped) ++res.skipped;
    for (const auto& e : c.entries) {
      if (e.verdict.unzipping) ++res.unzippings;
      if (!e.symmetric) ++res.asymmetric;
    }
  }
  return res;
}

SweepGrid sweep_grid_from_json(const nlohmann::json& j) {
  SweepGrid g;
  try {
    auto degrees = [&](const char* key) {
      std::vector<double> out;
      for (const auto& x : j.at(key)) out.push_back(deg2rad(x.get<double>()));
      return out;
    };
    g.omega_a = degrees("omega_a_deg");
    g.omega_c = degrees("omega_c_deg");
    g.epsilon = j.at("epsilon").get<std::vector<double>>();
    if (j.contains("types")) {
      g.types.clear();
      for (const auto& t : j.at("types")) g.types.push_back(cut_type_from_string(t.get<std::string>()));
    }
    if (j.contains("strategies")) {
      g.strategies.clear();
      for (const auto& s : j.at("strategies")) {
        g.strategies.push_back(strategy_from_string(s.get<std::string>()));
      }
    }
    g.check_symmetry = j.value("check_symmetry", true);
    g.workers = j.value("workers", 0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("sweep config: ") + e.what());
  }
  g.validate();
  return g;
}

nlohmann::json to_json(const SweepGrid& g) {
  nlohmann::json wa = nlohmann::json::array(), wc = nlohmann::json::array();
  for (double w : g.omega_a) wa.push_back(rad2deg(w));
  for (double w : g.omega_c) wc.push_back(rad2deg(w));
  nlohmann::json types = nlohmann::json::array(), strategies = nlohmann::json::array();
  for (auto t : g.types) types.push_back(to_string(t));
  for (auto s : g.strategies) strategies.push_back(to_string(s));
  return {{"omega_a_deg", wa},     {"omega_c_deg", wc},
          {"epsilon", g.epsilon},  {"types", types},
          {"strategies", strategies}, {"check_symmetry", g.check_symmetry}};
}

nlohmann::json to_json(const SweepResult& r) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : r.cells) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : c.entries) {
      entries.push_back({{"type", to_string(e.type)},
                         {"strategy", to_string(e.strategy)},
                         {"symmetric", e.symmetric},
                         {"verdict", to_json(e.verdict)}});
    }
    nlohmann::json cell{{"omega_a_deg", rad2deg(c.omega_a)},
                        {"omega_c_deg", rad2deg(c.omega_c)},
                        {"epsilon", c.epsilon},
                        {"skipped", c.skipped}};
    if (c.skipped) {
      cell["skip_reason"] = c.skip_reason;
    } else {
      cell["params"] = to_json(c.params);
      cell["lemma1_angle_deg"] = rad2deg(c.lemma1.value);
      cell["lemma1_budget_deg"] = rad2deg(c.lemma1.budget);
      cell["entries"] = entries;
    }
    cells.push_back(cell);
  }
  return {{"schema", "capzip.sweep/1"},
          {"cells", cells},
          {"unzippings", r.unzippings},
          {"skipped", r.skipped},
          {"asymmetric", r.asymmetric},
          {"any_unzipping", r.any_unzipping()}};
}

std::string sweep_csv(const SweepResult& r) {
  std::string out =
      "omega_a_deg,omega_c_deg,epsilon,z_a,z_c,type,strategy,unzipping,crossings,"
      "layout_overlap_area,left_C,boundary_touches,pieces,symmetric,lemma1_angle_deg,reasons\n";
  char buf[512];
  for (const auto& c : r.cells) {
    if (c.skipped) {
      std::snprintf(buf, sizeof buf, "%.6g,%.6g,%.6g,,,,,,,,,,,,,skipped\n", rad2deg(c.omega_a),
                    rad2deg(c.omega_c), c.epsilon);
      out += buf;
      continue;
    }
    for (const auto& e : c.entries) {
      std::string reasons;
      for (const auto& s : e.verdict.reasons) {
        if (!reasons.empty()) reasons += ';';
        for (char ch : s) reasons += (ch == ',' ? ' ' : ch);
      }
      std::snprintf(buf, sizeof buf, "%.6g,%.6g,%.6g,%.9f,%.9f,%s,%s,%d,%d,%.6g,%d,%d,%d,%d,%.6f,",
                    rad2deg(c.omega_a), rad2deg(c.omega_c), c.epsilon, c.params.z_a, c.params.z_c,
                    to_string(e.type), to_string(e.strategy), e.verdict.unzipping ? 1 : 0,
                    e.verdict.crossings, e.verdict.layout_overlap_area, e.verdict.left_C ? 1 : 0,
                    e.verdict.boundary_touches, e.verdict.pieces, e.symmetric ? 1 : 0,
                    rad2deg(c.lemma1.value));
      out += buf;
      out += reasons;
      out += '\n';
    }
  }
  return out;
}

nlohmann::json to_json(const LemmaReport& r, bool include_developments) {
  nlohmann::json angles = nlohmann::json::array();
  for (const auto& a : r.angles) {
    angles.push_back({{"name", a.name},
                      {"value_deg", rad2deg(a.value)},
                      {"budget_deg", rad2deg(a.budget)},
                      {"exceeds_budget", a.value > a.budget}});
  }
  nlohmann::json j{{"schema", "capzip.lemma/1"},
                   {"lemma", r.lemma},
                   {"type", to_string(r.type.type)},
                   {"params", to_json(r.params)},
                   {"angles", angles},
                   {"straight", {{"path", r.straight_path.name},
                                 {"extended", r.straight.extended},
                                 {"verdict", to_json(r.straight_verdict)}}},
                   {"arc", {{"path", r.arc_path.name},
                            {"extended", r.arc.extended},
                            {"verdict", to_json(r.arc_verdict)}}}};
  if (!r.crossing_distance.empty()) j["arc"]["crossing_distance_by_stop"] = r.crossing_distance;
  if (include_developments) {
    j["straight"]["development"] = to_json(r.straight);
    j["arc"]["development"] = to_json(r.arc);
  }
  return j;
}

}  // namespace capzip
