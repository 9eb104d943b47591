#pragma once

// Scenario drivers for the four cut-path types and the parameter sweep.

#include <optional>
#include <string>
#include <vector>

#include "capzip/analysis.hpp"
#include "capzip/cap.hpp"
#include "capzip/cutpath.hpp"
#include "capzip/development.hpp"
#include "json.hpp"

namespace capzip {

enum class Strategy { Straight, LemmaArc };
const char* to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

// The cut-path type each lemma is about: 1 acaab, 2 caaab, 3 aacab, 4 aaacb.
PathType lemma_path_type(int lemma);

struct MeasuredAngle {
  std::string name;   // e.g. "c'a2'a2''"
  double value = 0.0;  // radians
  double budget = 0.0;  // the projected apron turn it is compared with
};

struct LemmaReport {
  int lemma = 0;
  CapParams params;
  PathType type;
  CutPath straight_path;
  CutPath arc_path;
  Development straight;
  Development arc;
  Verdict straight_verdict;
  Verdict arc_verdict;
  std::vector<MeasuredAngle> angles;
  // Per stop: distance from its R or L image to the nearest arc-path chain
  // crossing (empty without crossings).
  std::vector<double> crossing_distance;
};

// Builds the cap, develops the lemma's path type straight and with the
// lemma's arcs and measures the angles the argument relies on.
LemmaReport run_lemma_scenario(int lemma, const CapParams& params);

// The measured angle at the apron vertex after c for an acaab path, and the
// apron turn it is compared with.
MeasuredAngle lemma1_angle(const Cap& cap);

struct SweepGrid {
  std::vector<double> omega_a;  // radians
  std::vector<double> omega_c;
  std::vector<double> epsilon;
  std::vector<CutType> types{CutType::caaab, CutType::acaab, CutType::aacab, CutType::aaacb};
  std::vector<Strategy> strategies{Strategy::Straight, Strategy::LemmaArc};
  bool check_symmetry = true;
  int workers = 0;  // 0: hardware concurrency

  // Throws ParameterError on empty or out-of-range values.
  void validate() const;
  std::size_t num_cells() const { return omega_a.size() * omega_c.size() * epsilon.size(); }
};

// The acceptance grid: {0.5, 1, 2, 5, 10} degrees squared times
// epsilon in {0.002, 0.01, 0.05}.
SweepGrid default_sweep_grid();

struct SweepEntry {
  CutType type;
  Strategy strategy;
  Verdict verdict;
  bool symmetric = true;  // same verdict under both cap rotations
};

struct SweepCell {
  double omega_a = 0.0;
  double omega_c = 0.0;
  double epsilon = 0.0;
  bool skipped = false;
  std::string skip_reason;
  CapParams params;
  std::vector<SweepEntry> entries;
  MeasuredAngle lemma1;
};

struct SweepResult {
  std::vector<SweepCell> cells;  // grid order: epsilon, omega_a, omega_c
  int unzippings = 0;
  int skipped = 0;
  int asymmetric = 0;
  bool any_unzipping() const { return unzippings > 0; }
};

SweepResult sweep(const SweepGrid& grid);
SweepCell sweep_cell(double omega_a, double omega_c, double epsilon, const SweepGrid& grid);

SweepGrid sweep_grid_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SweepGrid& g);
nlohmann::json to_json(const SweepResult& r);
std::string sweep_csv(const SweepResult& r);
nlohmann::json to_json(const LemmaReport& r, bool include_developments = false);

}  // namespace capzip
