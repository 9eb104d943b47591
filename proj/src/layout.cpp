#include "capzip/layout.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "capzip/errors.hpp"

namespace capzip {

std::vector<Point2> LayoutRegion::placed_poly() const {
  std::vector<Point2> out;
  out.reserve(poly.size());
  for (const auto& p : poly) out.push_back(place.apply(p));
  return out;
}

int Layout::region_at(int face, const Point2& p) const {
  if (face < 0 || face >= static_cast<int>(face_regions.size())) return -1;
  int best = -1;
  double best_d = -1.0;
  for (int r : face_regions[face]) {
    const auto& poly = regions[r].poly;
    if (point_in_polygon(p, poly)) {
      const double d = distance_to_boundary(p, poly);
      if (d > best_d) {
        best_d = d;
        best = r;
      }
    }
  }
  return best;
}

namespace {

using EdgeKey = std::pair<int, int>;

EdgeKey key_of(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// Index of p on the polygon boundary, inserting it when it lies on an edge.
int insert_on_boundary(std::vector<Point2>& poly, const Point2& p, double tol) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (distance(poly[i], p) <= tol) return static_cast<int>(i);
  }
  int best = -1;
  double best_d = tol;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double d = distance_to_segment(p, poly[i], poly[(i + 1) % n]);
    if (d <= best_d) {
      best_d = d;
      best = static_cast<int>(i);
    }
  }
  if (best < 0) return -1;
  poly.insert(poly.begin() + best + 1, p);
  return best + 1;
}

int find_vertex(const std::vector<Point2>& poly, const Point2& p, double tol) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (distance(poly[i], p) <= tol) return static_cast<int>(i);
  }
  return -1;
}

// Splits `poly` by `chord` (endpoints on the boundary). Returns false when
// the chord does not split it into two proper parts.
bool split_polygon(const std::vector<Point2>& poly, const std::vector<Point2>& chord, double tol,
                   std::vector<Point2>& right, std::vector<Point2>& left) {
  std::vector<Point2> work = poly;
  if (insert_on_boundary(work, chord.front(), tol) < 0) return false;
  if (insert_on_boundary(work, chord.back(), tol) < 0) return false;
  const int s = find_vertex(work, chord.front(), tol);
  const int e = find_vertex(work, chord.back(), tol);
  if (s < 0 || e < 0 || s == e) return false;
  const int n = static_cast<int>(work.size());
  right.clear();
  left.clear();
  for (int i = s;; i = (i + 1) % n) {
    right.push_back(work[i]);
    if (i == e) break;
  }
  for (std::size_t i = chord.size() - 2; i >= 1; --i) right.push_back(chord[i]);
  for (int i = e;; i = (i + 1) % n) {
    left.push_back(work[i]);
    if (i == s) break;
  }
  for (std::size_t i = 1; i + 1 < chord.size(); ++i) left.push_back(chord[i]);
  const double min_area = tol * tol;
  return polygon_area(right) > min_area && polygon_area(left) > min_area;
}

Point2 chord_probe(const std::vector<Point2>& chord) {
  std::size_t best = 0;
  double best_len = -1.0;
  for (std::size_t i = 0; i + 1 < chord.size(); ++i) {
    const double l = distance(chord[i], chord[i + 1]);
    if (l > best_len) {
      best_len = l;
      best = i;
    }
  }
  return (chord[best] + chord[best + 1]) * 0.5;
}

struct EdgePiece {
  int region;
  int face;
  int k;
  double t0;  // parameter along key.first -> key.second
  double t1;
};

void run_placement(const Surface& s, Layout& L, const LayoutOptions& opt) {
  for (auto& r : L.regions) r.placed = false;
  std::vector<std::vector<int>> adj(L.regions.size());
  for (std::size_t g = 0; g < L.glue.size(); ++g) {
    adj[L.glue[g].r1].push_back(static_cast<int>(g));
    adj[L.glue[g].r2].push_back(static_cast<int>(g));
  }
  std::vector<char> tree(L.glue.size(), 0);
  if (L.root >= 0) {
    L.regions[L.root].placed = true;
    std::queue<int> q;
    q.push(L.root);
    while (!q.empty()) {
      const int r = q.front();
      q.pop();
      for (int gi : adj[r]) {
        const Glue& g = L.glue[gi];
        const int other = g.r1 == r ? g.r2 : g.r1;
        if (L.regions[other].placed) continue;
        // chart(g.r2 face) -> chart(g.face) is the hinge
        const Rigid2 h = s.hinge(g.face, g.k);
        if (other == g.r2) {
          L.regions[other].place = L.regions[r].place * h;
        } else {
          L.regions[other].place = L.regions[r].place * h.inverse();
        }
        L.regions[other].placed = true;
        tree[gi] = 1;
        q.push(other);
      }
    }
  }
  L.unplaced = 0;
  for (const auto& r : L.regions) {
    if (r.active && !r.placed) ++L.unplaced;
  }
  L.max_mismatch = 0.0;
  for (const auto& g : L.glue) {
    const auto& a = L.regions[g.r1];
    const auto& b = L.regions[g.r2];
    if (!a.placed || !b.placed) continue;
    const Rigid2 h = s.hinge(g.face, g.k);
    const auto& cf = s.chart(g.face);
    const int m = static_cast<int>(cf.size());
    for (const Point2& x : {cf[g.k], cf[(g.k + 1) % m]}) {
      const Point2 via_b = b.place.apply(h.inverse().apply(x));
      L.max_mismatch = std::max(L.max_mismatch, distance(a.place.apply(x), via_b));
    }
  }
  L.consistent = L.max_mismatch <= opt.consistency_tol;
}

}  // namespace

Layout build_layout(const Surface& s, const std::vector<FacePass>& passes,
                    const LayoutOptions& opt) {
  const double tol = opt.tol;
  Layout L;
  const int nf = s.num_faces();
  std::vector<char> traversed(nf, 0);
  std::map<EdgeKey, std::vector<std::pair<double, double>>> cuts;
  std::vector<std::vector<const FacePass*>> chords(nf);
  for (const auto& p : passes) {
    if (p.face < 0 || p.face >= nf) throw GeometryError("pass refers to a missing face");
    if (p.along_edge >= 0) {
      const int m = s.face_size(p.face);
      const int u = s.face(p.face)[p.along_edge];
      const int v = s.face(p.face)[(p.along_edge + 1) % m];
      const auto& c = s.chart(p.face);
      const Point2 a = c[p.along_edge], b = c[(p.along_edge + 1) % m];
      double lo = 1.0, hi = 0.0;
      for (const auto& q : p.pts) {
        const double t = std::clamp(dot(q - a, b - a) / norm2(b - a), 0.0, 1.0);
        lo = std::min(lo, t);
        hi = std::max(hi, t);
      }
      if (u > v) {
        std::swap(lo, hi);
        lo = 1.0 - lo;
        hi = 1.0 - hi;
      }
      cuts[key_of(u, v)].push_back({lo, hi});
      continue;
    }
    if (p.pts.size() < 2) continue;
    traversed[p.face] = 1;
    chords[p.face].push_back(&p);
  }

  L.face_regions.assign(nf, {});
  for (int f = 0; f < nf; ++f) {
    const bool ext = s.tag(f) == kExtensionTag;
    std::vector<std::vector<Point2>> polys{s.chart(f)};
    for (const FacePass* p : chords[f]) {
      const Point2 probe = chord_probe(p->pts);
      int target = -1;
      double depth = -1.0;
      for (std::size_t r = 0; r < polys.size(); ++r) {
        if (distance_to_boundary(p->pts.front(), polys[r]) > 1e-7) continue;
        if (distance_to_boundary(p->pts.back(), polys[r]) > 1e-7) continue;
        if (!point_in_polygon(probe, polys[r])) continue;
        const double d = distance_to_boundary(probe, polys[r]);
        if (d > depth) {
          depth = d;
          target = static_cast<int>(r);
        }
      }
      if (target < 0) continue;
      std::vector<Point2> right, left;
      if (split_polygon(polys[target], p->pts, 1e-7, right, left)) {
        polys[target] = std::move(right);
        polys.push_back(std::move(left));
      }
    }
    for (auto& poly : polys) {
      LayoutRegion r;
      r.face = f;
      r.poly = std::move(poly);
      r.active = !ext || traversed[f];
      r.counted = !ext;
      L.face_regions[f].push_back(static_cast<int>(L.regions.size()));
      L.regions.push_back(std::move(r));
    }
  }

  // Boundary stretches of each region lying on an original face edge.
  std::map<EdgeKey, std::vector<EdgePiece>> pieces;
  for (int ri = 0; ri < static_cast<int>(L.regions.size()); ++ri) {
    const auto& r = L.regions[ri];
    if (!r.active) continue;
    const auto& c = s.chart(r.face);
    const int m = static_cast<int>(c.size());
    const int n = static_cast<int>(r.poly.size());
    for (int i = 0; i < n; ++i) {
      const Point2 p = r.poly[i], q = r.poly[(i + 1) % n];
      const Point2 mid = (p + q) * 0.5;
      for (int k = 0; k < m; ++k) {
        const Point2 a = c[k], b = c[(k + 1) % m];
        if (distance_to_segment(p, a, b) > 1e-7 || distance_to_segment(q, a, b) > 1e-7 ||
            distance_to_segment(mid, a, b) > 1e-7) {
          continue;
        }
        const double l2 = norm2(b - a);
        double t0 = dot(p - a, b - a) / l2, t1 = dot(q - a, b - a) / l2;
        const int u = s.face(r.face)[k], v = s.face(r.face)[(k + 1) % m];
        if (u > v) {
          t0 = 1.0 - t0;
          t1 = 1.0 - t1;
        }
        if (t0 > t1) std::swap(t0, t1);
        pieces[key_of(u, v)].push_back({ri, r.face, k, t0, t1});
        break;
      }
    }
  }

  std::map<std::pair<int, int>, std::size_t> glue_index;
  for (const auto& [key, list] : pieces) {
    const auto cut_it = cuts.find(key);
    const double elen = distance(s.vertex(key.first), s.vertex(key.second));
    const double ptol = tol / std::max(elen, 1e-300);
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const auto& A = list[i];
        const auto& B = list[j];
        if (A.face == B.face) continue;
        const double lo = std::max(A.t0, B.t0), hi = std::min(A.t1, B.t1);
        if (hi - lo <= ptol) continue;
        // subtract cut intervals
        std::vector<std::pair<double, double>> free{{lo, hi}};
        if (cut_it != cuts.end()) {
          for (const auto& [c0, c1] : cut_it->second) {
            std::vector<std::pair<double, double>> next;
            for (const auto& [f0, f1] : free) {
              if (c1 <= f0 || c0 >= f1) {
                next.push_back({f0, f1});
                continue;
              }
              if (c0 > f0) next.push_back({f0, c0});
              if (c1 < f1) next.push_back({c1, f1});
            }
            free.swap(next);
          }
        }
        double len = 0.0;
        for (const auto& [f0, f1] : free) {
          if (f1 - f0 > ptol) len += (f1 - f0) * elen;
        }
        if (len <= tol) continue;
        const auto pr = std::make_pair(std::min(A.region, B.region), std::max(A.region, B.region));
        auto it = glue_index.find(pr);
        if (it != glue_index.end()) {
          L.glue[it->second].length += len;
          continue;
        }
        glue_index[pr] = L.glue.size();
        // r2 sits across edge k of r1's face
        L.glue.push_back({A.region, B.region, A.face, A.k, len});
      }
    }
  }

  // Pieces among counted regions.
  std::vector<int> parent(L.regions.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  double glued_counted = 0.0;
  for (const auto& g : L.glue) {
    if (L.regions[g.r1].counted && L.regions[g.r2].counted) {
      parent[find(g.r1)] = find(g.r2);
      glued_counted += g.length;
    }
  }
  std::map<int, int> comp_ids;
  double perimeter = 0.0;
  for (int ri = 0; ri < static_cast<int>(L.regions.size()); ++ri) {
    auto& r = L.regions[ri];
    if (!r.counted) continue;
    const int root = find(ri);
    auto it = comp_ids.emplace(root, static_cast<int>(comp_ids.size())).first;
    r.piece = it->second;
    const int n = static_cast<int>(r.poly.size());
    for (int i = 0; i < n; ++i) perimeter += distance(r.poly[i], r.poly[(i + 1) % n]);
  }
  L.pieces = static_cast<int>(comp_ids.size());
  L.free_boundary_length = perimeter - 2.0 * glued_counted;

  for (int ri = 0; ri < static_cast<int>(L.regions.size()); ++ri) {
    if (L.regions[ri].active) {
      L.root = ri;
      break;
    }
  }
  run_placement(s, L, opt);
  return L;
}

void place_from(const Surface& s, Layout& layout, int root, const Point2& origin,
                const Point2& dir, const LayoutOptions& opt) {
  if (root < 0 || root >= static_cast<int>(layout.regions.size())) {
    throw ParameterError("layout root out of range");
  }
  layout.root = root;
  Rigid2 pin(-angle_of(dir), {});
  pin = Rigid2(-angle_of(dir), -pin.apply_vector(origin));
  layout.regions[root].place = pin;
  run_placement(s, layout, opt);
}

double layout_overlap_area(const Layout& layout, std::vector<OverlapPair>* pairs, double tol) {
  struct Item {
    int region;
    std::vector<Triangle2> tris;
    std::vector<Box2> boxes;
    Box2 box;
  };
  std::vector<Item> items;
  const Tolerance t{tol, 1e-9};
  for (int ri = 0; ri < static_cast<int>(layout.regions.size()); ++ri) {
    const auto& r = layout.regions[ri];
    if (!r.counted || !r.placed) continue;
    Item it;
    it.region = ri;
    const auto poly = r.placed_poly();
    it.tris = triangulate(poly, t);
    for (const auto& tri : it.tris) it.boxes.push_back(bounds(tri));
    it.box = bounds(poly);
    items.push_back(std::move(it));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (!items[i].box.overlaps(items[j].box)) continue;
      double area = 0.0;
      for (std::size_t a = 0; a < items[i].tris.size(); ++a) {
        for (std::size_t b = 0; b < items[j].tris.size(); ++b) {
          if (!items[i].boxes[a].overlaps(items[j].boxes[b])) continue;
          area += convex_intersection_area(items[i].tris[a], items[j].tris[b]);
        }
      }
      // Contact along shared edges yields area at rounding level only.
      if (area > 1e-12) {
        total += area;
        if (pairs) pairs->push_back({items[i].region, items[j].region, area});
      }
    }
  }
  return total;
}

}  // namespace capzip
