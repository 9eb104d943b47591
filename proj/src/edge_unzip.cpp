#include "capzip/edge_unzip.hpp"

#include <algorithm>
#include <numeric>

#include "capzip/development.hpp"
#include "capzip/errors.hpp"

namespace capzip {

Skeleton Skeleton::of(const Surface& s) { return from_edges(s.num_vertices(), s.edges()); }

Skeleton Skeleton::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  Skeleton g;
  g.num_vertices = n;
  g.adjacency.assign(n, {});
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParameterError("bad skeleton edge");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [u, v] : edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
  g.edges = std::move(edges);
  return g;
}

bool Skeleton::adjacent(int u, int v) const {
  const auto& a = adjacency.at(u);
  return std::binary_search(a.begin(), a.end(), v);
}

namespace {

bool connected_without(const Skeleton& g, int skip1, int skip2) {
  std::vector<char> seen(g.num_vertices, 0);
  int start = -1, expected = 0;
  for (int v = 0; v < g.num_vertices; ++v) {
    if (v == skip1 || v == skip2) continue;
    ++expected;
    if (start < 0) start = v;
  }
  if (start < 0) return true;
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : g.adjacency[v]) {
      if (w == skip1 || w == skip2 || seen[w]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return count == expected;
}

}  // namespace

bool Skeleton::connected() const { return connected_without(*this, -1, -1); }

bool Skeleton::three_connected() const {
  if (num_vertices < 4) return false;
  for (int a = 0; a < num_vertices; ++a) {
    for (int b = a + 1; b < num_vertices; ++b) {
      if (!connected_without(*this, a, b)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> hamiltonian_paths(const Skeleton& g, std::size_t limit) {
  std::vector<std::vector<int>> out;
  const int n = g.num_vertices;
  if (n == 0 || limit == 0) return out;
  if (n == 1) return {{0}};
  std::vector<int> starts(n);
  std::iota(starts.begin(), starts.end(), 0);
  std::stable_sort(starts.begin(), starts.end(), [&](int a, int b) {
    return g.adjacency[a].size() < g.adjacency[b].size();
  });
  std::vector<char> used(n, 0);
  std::vector<int> path;
  // Each path is kept in the orientation whose first vertex is smaller.
  auto dfs = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    if (static_cast<int>(path.size()) == n) {
      if (path.front() < path.back()) out.push_back(path);
      return;
    }
    for (int w : g.adjacency[path.back()]) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      self(self);
      path.pop_back();
      used[w] = 0;
      if (out.size() >= limit) return;
    }
  };
  for (int s : starts) {
    used[s] = 1;
    path = {s};
    dfs(dfs);
    used[s] = 0;
    if (out.size() >= limit) break;
  }
  return out;
}

CutPath edge_cut_path(const Surface& s, const std::vector<int>& order) {
  if (order.size() < 2) throw ParameterError("an edge path needs at least two vertices");
  CutPath p;
  p.name = "edge-path";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] < 0 || order[i] >= s.num_vertices()) throw ParameterError("vertex out of range");
    if (i > 0 && !s.find_edge(order[i - 1], order[i]) && !s.find_edge(order[i], order[i - 1])) {
      throw ParameterError("vertices " + std::to_string(order[i - 1]) + " and " +
                           std::to_string(order[i]) + " are not adjacent");
    }
    p.stops.push_back(SurfacePoint::at_vertex(order[i]));
  }
  p.segments.assign(order.size() - 1, SegmentGeom::geodesic());
  return p;
}

EdgeUnzipResult edge_unzip_check(const Surface& s, const std::vector<int>& order) {
  const CutPath path = edge_cut_path(s, order);
  EdgeUnzipResult r;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    r.cut_length += distance(s.vertex(order[i]), s.vertex(order[i + 1]));
  }
  try {
    const Development d = develop_cut(s, path);
    r.verdict = evaluate_verdict(s, path, d);
    r.free_boundary_length = d.layout.free_boundary_length;
    for (const auto& reg : d.layout.regions) {
      if (!reg.placed) continue;
      const auto poly = reg.placed_poly();
      const auto& f = s.face(reg.face);
      if (poly.size() != f.size()) continue;
      for (std::size_t k = 0; k < f.size(); ++k) {
        const double l2 = distance(poly[k], poly[(k + 1) % f.size()]);
        const double l3 = distance(s.vertex(f[k]), s.vertex(f[(k + 1) % f.size()]));
        r.max_edge_error = std::max(r.max_edge_error, std::abs(l2 - l3));
      }
    }
  } catch (const GeometryError& e) {
    r.verdict.reasons.push_back(std::string("development-failed: ") + e.what());
  }
  return r;
}

EdgeUnzipSearch find_edge_unzipping(const Surface& s, std::size_t limit) {
  EdgeUnzipSearch out;
  const auto paths = hamiltonian_paths(Skeleton::of(s), limit);
  out.paths_found = paths.size();
  for (const auto& p : paths) {
    ++out.paths_checked;
    EdgeUnzipResult r = edge_unzip_check(s, p);
    if (r.verdict.unzipping) {
      out.first_unzipping = p;
      out.first_result = r;
      break;
    }
  }
  return out;
}

nlohmann::json to_json(const EdgeUnzipSearch& r) {
  nlohmann::json j{{"schema", "capzip.edge-unzip/1"},
                   {"hamiltonian_paths", r.paths_found},
                   {"paths_checked", r.paths_checked},
                   {"unzipping_found", !r.first_unzipping.empty()}};
  if (!r.first_unzipping.empty()) {
    j["path"] = r.first_unzipping;
    j["verdict"] = to_json(r.first_result.verdict);
    j["cut_length"] = r.first_result.cut_length;
    j["free_boundary_length"] = r.first_result.free_boundary_length;
    j["max_edge_error"] = r.first_result.max_edge_error;
  }
  return j;
}

}  // namespace capzip
