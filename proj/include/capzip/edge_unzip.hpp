#pragma once

// Edge-unzippings: cut paths that follow the edges of a closed polyhedron,
// i.e. Hamiltonian paths of its 1-skeleton.

#include <string>
#include <vector>

#include "capzip/analysis.hpp"
#include "capzip/cutpath.hpp"
#include "capzip/surface.hpp"
#include "json.hpp"

namespace capzip {

struct Skeleton {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // u < v
  std::vector<std::vector<int>> adjacency;

  static Skeleton of(const Surface& s);
  static Skeleton from_edges(int n, std::vector<std::pair<int, int>> edges);
  bool adjacent(int u, int v) const;
  bool connected() const;
  // Vertex connectivity is at least 3 (slow brute force; small graphs only).
  bool three_connected() const;
};

// Hamiltonian paths, each listed once (the reversal is dropped), in
// backtracking order from low-degree start vertices. At most `limit`.
std::vector<std::vector<int>> hamiltonian_paths(const Skeleton& g, std::size_t limit);

// The vertex sequence as a cut path with one edge-geodesic per step.
// Throws ParameterError when consecutive vertices are not adjacent.
CutPath edge_cut_path(const Surface& s, const std::vector<int>& order);

struct EdgeUnzipResult {
  Verdict verdict;
  double cut_length = 0.0;
  double free_boundary_length = 0.0;
  double max_edge_error = 0.0;  // unfolded vs 3D edge lengths
};

EdgeUnzipResult edge_unzip_check(const Surface& s, const std::vector<int>& order);

struct EdgeUnzipSearch {
  std::size_t paths_found = 0;
  std::size_t paths_checked = 0;
  std::vector<int> first_unzipping;  // empty when none was found
  EdgeUnzipResult first_result;
};

// Checks up to `limit` Hamiltonian paths, stopping at the first unzipping.
EdgeUnzipSearch find_edge_unzipping(const Surface& s, std::size_t limit);

nlohmann::json to_json(const EdgeUnzipSearch& r);

}  // namespace capzip
