#pragma once

// Face-by-face layout of a cut surface, computed directly from the traced
// cut curves. Every face is split into regions along the curves crossing
// it; regions on either side of an uncut stretch of a shared edge are glued
// and placed by breadth-first hinge unfolding.

#include <vector>

#include "capzip/geodesic.hpp"
#include "capzip/surface.hpp"

namespace capzip {

struct LayoutRegion {
  int face = -1;
  std::vector<Point2> poly;  // chart coordinates, CCW
  bool active = true;        // part of the surface being laid out
  bool counted = true;       // contributes to overlap and piece counts
  bool placed = false;
  Rigid2 place;  // chart -> plane
  int piece = -1;

  std::vector<Point2> placed_poly() const;
};

struct Glue {
  int r1 = -1;
  int r2 = -1;
  int face = -1;  // r1's face; r2 sits across edge k of it
  int k = -1;
  double length = 0.0;
};

struct Layout {
  std::vector<LayoutRegion> regions;
  std::vector<std::vector<int>> face_regions;
  std::vector<Glue> glue;
  int root = -1;
  int pieces = 0;           // connected components among counted regions
  int unplaced = 0;         // active regions not reachable from the root
  double max_mismatch = 0.0;
  bool consistent = true;   // all glued edges agree after placement
  double free_boundary_length = 0.0;  // counted perimeter not glued to counted regions

  // Region of `face` containing chart point p, or -1.
  int region_at(int face, const Point2& p) const;
};

struct LayoutOptions {
  double tol = 1e-9;
  double consistency_tol = 1e-7;
};

// Splits faces along the passes, glues regions and places them starting at
// region `root` (-1: the first active region). Faces tagged kExtensionTag
// take part only when a pass runs through them and are never counted.
Layout build_layout(const Surface& s, const std::vector<FacePass>& passes,
                    const LayoutOptions& opt = {});

// Places region `root` so that chart point `origin` maps to (0,0) and the
// chart direction `dir` to +x, then re-runs the placement.
void place_from(const Surface& s, Layout& layout, int root, const Point2& origin,
                const Point2& dir, const LayoutOptions& opt = {});

struct OverlapPair {
  int r1;
  int r2;
  double area;
};

// Total pairwise interior overlap of placed counted regions.
double layout_overlap_area(const Layout& layout, std::vector<OverlapPair>* pairs = nullptr,
                           double tol = 1e-9);

}  // namespace capzip
