#pragma once

// Shared fixtures for the test binaries: canned complexes, seeded random
// generators and a couple of deliberately independent oracles (bipartite
// two-coloring, coface connectivity) used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "simplap/simplap.hpp"

namespace fixtures {

using namespace simplap;

inline SimplicialComplex p3() {  // path 0-1-2
  return SimplicialComplex::from_facets({{0, 1}, {1, 2}});
}

inline SimplicialComplex hollow_triangle() {
  return SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}});
}

inline SimplicialComplex full_triangle() {
  return SimplicialComplex::from_facets({{0, 1, 2}});
}

inline SimplicialComplex c4() {  // cycle 0-1-2-3
  return SimplicialComplex::from_facets({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline SimplicialComplex two_triangles() {  // glued along {1,2}
  return SimplicialComplex::from_facets({{0, 1, 2}, {1, 2, 3}});
}

inline SimplicialComplex simplex(int k) {  // full simplex on {0..k}
  Face f(static_cast<std::size_t>(k) + 1);
  for (int v = 0; v <= k; ++v) f[static_cast<std::size_t>(v)] = v;
  return SimplicialComplex::from_facets({f});
}

inline SimplicialComplex tetrahedron() { return simplex(3); }

inline SimplicialComplex two_disjoint_edges() {
  return SimplicialComplex::from_facets({{0, 1}, {2, 3}});
}

/// Spectrum values as a plain vector for comparisons.
inline std::vector<double> spectrum_of(const SimplicialComplex& K, int i,
                                       const WeightFunction& w,
                                       const OrientationAssignment& o,
                                       LaplacianKind kind) {
  return eigenvalues(laplacian(K, i, w, o, kind)).values;
}

inline bool close_multiset(const std::vector<double>& a,
                           const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<double> x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (std::size_t k = 0; k < x.size(); ++k)
    if (std::abs(x[k] - y[k]) > tol) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Random instance generators.  Everything is seeded explicitly so the suite
// is reproducible run to run.
// ---------------------------------------------------------------------------

/// Random complex with at most `max_vertices` vertices and dimension at most
/// `max_dim`; always nonempty (at least one vertex).
inline SimplicialComplex random_complex(std::mt19937& rng, int max_vertices = 8,
                                        int max_dim = 3) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int n = nv(rng);
  std::uniform_int_distribution<int> nfac(1, 6);
  std::uniform_int_distribution<int> fsize(1, std::min(n, max_dim + 1));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<Face> facets;
  const int m = nfac(rng);
  for (int t = 0; t < m; ++t) {
    std::set<Vertex> s;
    const int sz = fsize(rng);
    while (static_cast<int>(s.size()) < sz) s.insert(pick(rng));
    facets.emplace_back(s.begin(), s.end());
  }
  return SimplicialComplex::from_facets(facets);
}

inline WeightFunction random_weights(std::mt19937& rng,
                                     const SimplicialComplex& K) {
  std::uniform_real_distribution<double> val(0.25, 4.0);
  WeightFunction w;
  for (int d = -1; d <= K.dim(); ++d)
    for (const Face& f : K.faces_of_dim(d)) w.set(f, val(rng));
  return w;
}

inline OrientationAssignment random_orientation(std::mt19937& rng,
                                                const SimplicialComplex& K) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Face> flips;
  for (int d = 0; d <= K.dim(); ++d)
    for (const Face& f : K.faces_of_dim(d))
      if (coin(rng)) flips.push_back(f);
  return OrientationAssignment::from_flips(flips);
}

/// Random connected graph (1-dimensional complex) on n >= 2 vertices:
/// a random spanning tree plus a few extra edges.
inline SimplicialComplex random_connected_graph(std::mt19937& rng, int n) {
  std::vector<Face> edges;
  std::uniform_int_distribution<int> extra(0, n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.push_back(make_face({parent(rng), v}));
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int m = extra(rng);
  for (int t = 0; t < m; ++t) {
    int a = pick(rng), b = pick(rng);
    if (a != b) edges.push_back(make_face({a, b}));
  }
  return SimplicialComplex::from_facets(edges);
}

// ---------------------------------------------------------------------------
// Independent oracles.
// ---------------------------------------------------------------------------

/// Two-colorability of the 1-skeleton, by plain BFS coloring.  Vacuously
/// true when there are no edges.
inline bool graph_bipartite(const SimplicialComplex& K) {
  if (K.dim() < 0) return true;
  const auto& verts = K.faces_of_dim(0);
  const int n = static_cast<int>(verts.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  if (K.dim() >= 1) {
    for (const Face& e : K.faces_of_dim(1)) {
      int a = K.face_index(0, {e[0]});
      int b = K.face_index(0, {e[1]});
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
  }
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != 0) continue;
    color[static_cast<std::size_t>(s)] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (color[static_cast<std::size_t>(v)] == 0) {
          color[static_cast<std::size_t>(v)] = -color[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (color[static_cast<std::size_t>(v)] ==
                   color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Reference implementation of level-i path connectivity: every i-face has a
/// coface, and the i-faces are connected through shared (i+1)-cofaces.
inline bool coface_connected(const SimplicialComplex& K, int i) {
  const auto& lo = K.faces_of_dim(i);
  const auto& hi = K.faces_of_dim(i + 1);
  if (lo.empty()) return false;
  const int n = static_cast<int>(lo.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (const Face& F : hi) {
    std::vector<int> members;
    for (int c = 0; c < n; ++c)
      if (face_subset(lo[static_cast<std::size_t>(c)], F)) members.push_back(c);
    for (int c : members) covered[static_cast<std::size_t>(c)] = true;
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        adj[static_cast<std::size_t>(members[a])].push_back(members[b]);
        adj[static_cast<std::size_t>(members[b])].push_back(members[a]);
      }
  }
  for (bool c : covered)
    if (!c) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        q.push(v);
      }
  }
  return reached == n;
}

/// The explicit negative cycle in the level-(k-2) incidence graph of the
/// full k-simplex: alternating faces F∖{a} and F∖{a,b} over an index cycle
/// (1..k when k is odd, 0..k when k is even).
inline std::vector<Face> simplex_negative_cycle(int k) {
  Face full;
  for (int v = 0; v <= k; ++v) full.push_back(v);
  auto drop = [&](std::initializer_list<Vertex> out) {
    Face f;
    for (Vertex v : full)
      if (std::find(out.begin(), out.end(), v) == out.end()) f.push_back(v);
    return f;
  };
  std::vector<int> idx;
  for (int v = (k % 2 == 1 ? 1 : 0); v <= k; ++v) idx.push_back(v);
  std::vector<Face> cycle;
  const std::size_t m = idx.size();
  for (std::size_t t = 0; t < m; ++t) {
    int a = idx[t], b = idx[(t + 1) % m];
    cycle.push_back(drop({a}));
    cycle.push_back(drop({a, b}));
  }
  return cycle;
}

/// Relabels a complex so its vertex set is disjoint from `taken`:
/// each vertex v becomes v + shift.
inline SimplicialComplex shift_labels(const SimplicialComplex& K, int shift) {
  std::vector<Face> facets;
  for (const Face& f : K.facets()) {
    Face g = f;
    for (Vertex& v : g) v += shift;
    facets.push_back(g);
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace fixtures
