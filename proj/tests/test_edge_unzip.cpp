#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "capzip/edge_unzip.hpp"
#include "capzip/errors.hpp"
#include "test_support.hpp"

using namespace capzip;
using capzip::testing::solid;

namespace {

// Hamiltonian paths by trying every vertex permutation; each path is
// counted once with its reversal.
std::size_t brute_force_paths(const Skeleton& g) {
  std::vector<int> p(g.num_vertices);
  std::iota(p.begin(), p.end(), 0);
  std::size_t n = 0;
  do {
    if (p.front() > p.back()) continue;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < p.size() && ok; ++i) ok = g.adjacent(p[i], p[i + 1]);
    n += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return n;
}

}  // namespace

TEST(Skeleton, Platonic) {
  const struct {
    const char* name;
    int v, e;
  } solids[] = {{"tetrahedron", 4, 6},   {"cube", 8, 12},          {"octahedron", 6, 12},
                {"dodecahedron", 20, 30}, {"icosahedron", 12, 30}, {"rhombic_dodecahedron", 14, 24}};
  for (const auto& s : solids) {
    const Skeleton g = Skeleton::of(solid(s.name));
    EXPECT_EQ(g.num_vertices, s.v) << s.name;
    EXPECT_EQ(static_cast<int>(g.edges.size()), s.e) << s.name;
    EXPECT_TRUE(g.connected());
  }
  EXPECT_TRUE(Skeleton::of(solid("cube")).three_connected());
  EXPECT_FALSE(Skeleton::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}).three_connected());
}

TEST(Hamiltonian, MatchesBruteForce) {
  for (const char* name : {"tetrahedron", "cube", "octahedron"}) {
    const Skeleton g = Skeleton::of(solid(name));
    const auto paths = hamiltonian_paths(g, 1000000);
    EXPECT_EQ(paths.size(), brute_force_paths(g)) << name;
    for (const auto& p : paths) {
      EXPECT_EQ(static_cast<int>(p.size()), g.num_vertices);
      EXPECT_LT(p.front(), p.back());
    }
  }
  EXPECT_EQ(hamiltonian_paths(Skeleton::of(solid("cube")), 1000000).size(), 72u);
  EXPECT_EQ(hamiltonian_paths(Skeleton::of(solid("cube")), 5).size(), 5u);
}

TEST(Hamiltonian, RhombicDodecahedronHasNone) {
  // bipartite with parts of 6 and 8 vertices
  EXPECT_TRUE(hamiltonian_paths(Skeleton::of(solid("rhombic_dodecahedron")), 1000000).empty());
}

TEST(EdgeUnzip, PlatonicSolidsUnzip) {
  for (const char* name : {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"}) {
    const Surface s = solid(name);
    const EdgeUnzipSearch r = find_edge_unzipping(s, 100);
    ASSERT_FALSE(r.first_unzipping.empty()) << name;
    const EdgeUnzipResult& u = r.first_result;
    EXPECT_TRUE(u.verdict.unzipping) << name;
    EXPECT_LT(u.verdict.layout_overlap_area, 1e-9);
    EXPECT_EQ(u.verdict.pieces, 1);
    EXPECT_LT(u.max_edge_error, 1e-9);
    EXPECT_NEAR(u.free_boundary_length, 2 * u.cut_length, 1e-9) << name;
    EXPECT_EQ(to_json(r).at("schema"), "capzip.edge-unzip/1");
  }
}

TEST(EdgeUnzip, CubePathUnfoldsToSixSquares) {
  const Surface s = solid("cube");
  const auto paths = hamiltonian_paths(Skeleton::of(s), 1);
  const EdgeUnzipResult r = edge_unzip_check(s, paths.at(0));
  EXPECT_NEAR(r.cut_length, 7.0 * distance(s.vertex(s.edges()[0].first), s.vertex(s.edges()[0].second)),
              1e-9);
}

TEST(EdgeUnzip, PleatedFanOverlaps) {
  const Surface s = solid("pleated_fan");
  const auto paths = hamiltonian_paths(Skeleton::of(s), 1);
  ASSERT_FALSE(paths.empty());
  const EdgeUnzipResult r = edge_unzip_check(s, paths[0]);
  EXPECT_FALSE(r.verdict.unzipping);
  EXPECT_GT(r.verdict.layout_overlap_area, 1e-6);
}

TEST(EdgeUnzip, RejectsNonEdges) {
  const Surface s = solid("cube");
  const Skeleton g = Skeleton::of(s);
  int u = 0, v = 1;
  while (g.adjacent(u, v)) ++v;
  EXPECT_THROW(edge_cut_path(s, {u, v}), ParameterError);
}
