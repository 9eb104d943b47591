#pragma once

// Deterministic SVG output. Coordinates are written with six decimals and
// the y axis is flipped so that drawings read with +y up.

#include <string>
#include <vector>

#include "capzip/cap.hpp"
#include "capzip/development.hpp"
#include "capzip/search.hpp"

namespace capzip {

struct RenderOptions {
  bool show_layout = true;
  bool show_labels = true;
  // Names for the stops; R images get a prime, L images a double prime.
  std::vector<std::string> stop_names;
  double margin = 0.05;
  double stroke = 0.004;
  double font_size = 0.035;
  std::string title;
};

std::string render_development(const Development& d, const RenderOptions& opt = {});

// The cap seen from above, with an optional cut path drawn over it.
std::string render_projection(const Surface& s, const CapLabels& labels,
                              const std::vector<Point3>& path = {},
                              const RenderOptions& opt = {});

std::string render_sweep(const SweepResult& r, const RenderOptions& opt = {});

// Names of stops for a cut path on the cap ("a1", "c", "b3", ...).
std::vector<std::string> stop_names(const CutPath& p, const CapLabels& labels);

// Named drawings reproducing the standard fixtures: "cap-projection",
// "<type>-straight", "<type>-arc", "<type>-projection" for the four cut
// types, and "closed-unzipping". Throws ParameterError on unknown names.
std::vector<std::string> figure_names();
std::string render_figure(const std::string& name, const CapParams& params);

}  // namespace capzip
