#pragma once

/**
 * Signed bipartite incidence graphs and balance detection.
 *
 * For a complex K and level i, the incidence graph has the i-faces on one
 * side, the (i+1)-faces on the other, and an edge of sign
 * sgn([F], ∂[F̄]) for every incidence.  A signed graph is balanced when no
 * cycle has negative sign product, equivalently when the vertices admit a
 * potential θ : V -> {-1,+1} with θ(u)·θ(v) equal to the sign of every edge
 * uv.  Balance checks here always return a certificate: the potential when
 * balanced, or an explicit negative cycle when not.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simplap/complex.hpp"

namespace simplap {

struct SignedEdge {
  int u = 0;  // index into `left`
  int v = 0;  // index into `right`
  int sign = 1;
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/**
 * A bipartite signed graph whose vertices are faces.  Vertices are
 * identified by global ids: 0..|left|-1 for the left side followed by
 * |left|..|left|+|right|-1 for the right side.  Since the two sides hold
 * faces of different cardinality, a face determines its vertex uniquely.
 */
struct SignedGraph {
  std::vector<Face> left;        // i-faces, lexicographic
  std::vector<Face> right;       // (i+1)-faces, lexicographic
  std::vector<SignedEdge> edges; // sorted by (u, v)

  int num_vertices() const {
    return static_cast<int>(left.size() + right.size());
  }

  int left_index(const Face& f) const {
    auto it = std::lower_bound(left.begin(), left.end(), f);
    if (it == left.end() || *it != f) return -1;
    return static_cast<int>(it - left.begin());
  }

  int right_index(const Face& f) const {
    auto it = std::lower_bound(right.begin(), right.end(), f);
    if (it == right.end() || *it != f) return -1;
    return static_cast<int>(it - right.begin());
  }

  /// Global id of the vertex holding this face; throws if absent.
  int vertex_id(const Face& f) const {
    int u = left_index(f);
    if (u >= 0) return u;
    int v = right_index(f);
    if (v >= 0) return static_cast<int>(left.size()) + v;
    throw std::invalid_argument("face is not a vertex of the signed graph: " +
                                face_to_string(f));
  }

  const Face& face_of(int gid) const {
    const int nl = static_cast<int>(left.size());
    if (gid < 0 || gid >= num_vertices())
      throw std::out_of_range("signed graph vertex id out of range");
    return gid < nl ? left[static_cast<std::size_t>(gid)]
                    : right[static_cast<std::size_t>(gid - nl)];
  }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;
};

/// The level-i incidence graph of K under orientation o.
inline SignedGraph incidence_signed_graph(const SimplicialComplex& K, int i,
                                          const OrientationAssignment& o) {
  if (i < 0 || i > K.dim() - 1)
    throw std::invalid_argument("incidence graph level must satisfy 0 <= i <= dim-1");
  SignedGraph G;
  G.left = K.faces_of_dim(i);
  G.right = K.faces_of_dim(i + 1);
  Face sub;
  for (std::size_t r = 0; r < G.right.size(); ++r) {
    const Face& fbar = G.right[r];
    for (std::size_t omit = 0; omit < fbar.size(); ++omit) {
      sub.clear();
      for (std::size_t k = 0; k < fbar.size(); ++k)
        if (k != omit) sub.push_back(fbar[k]);
      int u = K.face_index(i, sub);
      G.edges.push_back({u, static_cast<int>(r), incidence_sign(sub, fbar, o)});
    }
  }
  std::sort(G.edges.begin(), G.edges.end(),
            [](const SignedEdge& a, const SignedEdge& b) {
              return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });
  return G;
}

struct BalanceCertificate {
  bool balanced = true;
  /// Defined on every vertex iff balanced: edge signs equal θ(u)·θ(v).
  std::map<Face, int> potential;
  /// Nonempty iff unbalanced: a simple cycle (consecutive vertices adjacent,
  /// wrapping around) whose sign product is -1.
  std::vector<Face> negative_cycle;
};

namespace detail {

struct GraphAdjacency {
  // For each global vertex id, the incident edge indices in edge order.
  std::vector<std::vector<int>> incident;

  explicit GraphAdjacency(const SignedGraph& G)
      : incident(static_cast<std::size_t>(G.num_vertices())) {
    const int nl = static_cast<int>(G.left.size());
    for (std::size_t e = 0; e < G.edges.size(); ++e) {
      incident[static_cast<std::size_t>(G.edges[e].u)].push_back(static_cast<int>(e));
      incident[static_cast<std::size_t>(G.edges[e].v + nl)].push_back(static_cast<int>(e));
    }
  }
};

inline int edge_other_end(const SignedGraph& G, const SignedEdge& e, int gid) {
  const int nl = static_cast<int>(G.left.size());
  return gid == e.u ? e.v + nl : e.u;
}

}  // namespace detail

/**
 * Balance test by potential propagation over a breadth-first spanning
 * forest grown in increasing vertex-id order.  Balanced graphs yield the
 * potential; unbalanced graphs yield the fundamental cycle of the first
 * non-tree edge whose sign disagrees with the potential.
 */
inline BalanceCertificate is_balanced(const SignedGraph& G) {
  const int n = G.num_vertices();
  detail::GraphAdjacency adj(G);
  std::vector<int> theta(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);

  for (int root = 0; root < n; ++root) {
    if (theta[static_cast<std::size_t>(root)] != 0) continue;
    theta[static_cast<std::size_t>(root)] = +1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int ei : adj.incident[static_cast<std::size_t>(u)]) {
        const SignedEdge& e = G.edges[static_cast<std::size_t>(ei)];
        int v = detail::edge_other_end(G, e, u);
        if (theta[static_cast<std::size_t>(v)] == 0) {
          theta[static_cast<std::size_t>(v)] =
              e.sign * theta[static_cast<std::size_t>(u)];
          parent[static_cast<std::size_t>(v)] = u;
          depth[static_cast<std::size_t>(v)] =
              depth[static_cast<std::size_t>(u)] + 1;
          q.push(v);
        }
      }
    }
  }

  const int nl = static_cast<int>(G.left.size());
  for (const SignedEdge& e : G.edges) {
    int u = e.u, v = e.v + nl;
    if (theta[static_cast<std::size_t>(u)] * theta[static_cast<std::size_t>(v)] ==
        e.sign)
      continue;
    // Fundamental cycle of (u, v): walk both endpoints up to their lowest
    // common ancestor in the forest.
    BalanceCertificate cert;
    cert.balanced = false;
    std::vector<int> up_u, up_v;
    int a = u, b = v;
    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
      up_u.push_back(a);
      a = parent[static_cast<std::size_t>(a)];
    }
    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
      up_v.push_back(b);
      b = parent[static_cast<std::size_t>(b)];
    }
    while (a != b) {
      up_u.push_back(a);
      up_v.push_back(b);
      a = parent[static_cast<std::size_t>(a)];
      b = parent[static_cast<std::size_t>(b)];
    }
    up_u.push_back(a);  // the common ancestor, once
    for (int k : up_u) cert.negative_cycle.push_back(G.face_of(k));
    for (auto it = up_v.rbegin(); it != up_v.rend(); ++it)
      cert.negative_cycle.push_back(G.face_of(*it));
    return cert;
  }

  BalanceCertificate cert;
  cert.balanced = true;
  for (int gid = 0; gid < n; ++gid)
    cert.potential[G.face_of(gid)] = theta[static_cast<std::size_t>(gid)];
  return cert;
}

/// Switching at a vertex set S: edges with exactly one endpoint in S change
/// sign.  Switching never changes the balance verdict.
inline SignedGraph switch_signs(const SignedGraph& G, const std::vector<Face>& S) {
  std::set<int> ids;
  for (const Face& f : S) ids.insert(G.vertex_id(f));
  SignedGraph out = G;
  const int nl = static_cast<int>(G.left.size());
  for (SignedEdge& e : out.edges) {
    bool inu = ids.count(e.u) > 0;
    bool inv = ids.count(e.v + nl) > 0;
    if (inu != inv) e.sign = -e.sign;
  }
  return out;
}

/// Sign product along a closed vertex walk; consecutive vertices (with
/// wraparound) must be adjacent.
inline int cycle_sign(const SignedGraph& G, const std::vector<Face>& cycle) {
  if (cycle.size() < 2)
    throw std::invalid_argument("cycle_sign needs at least two vertices");
  std::map<std::pair<int, int>, int> sign_of;
  for (const SignedEdge& e : G.edges) sign_of[{e.u, e.v}] = e.sign;
  const int nl = static_cast<int>(G.left.size());
  int product = 1;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    int a = G.vertex_id(cycle[k]);
    int b = G.vertex_id(cycle[(k + 1) % cycle.size()]);
    if (a >= nl) std::swap(a, b);  // normalize to (left, right)
    auto it = (b >= nl) ? sign_of.find({a, b - nl}) : sign_of.end();
    if (it == sign_of.end())
      throw std::invalid_argument("cycle_sign: vertices " +
                                  face_to_string(cycle[k]) + " and " +
                                  face_to_string(cycle[(k + 1) % cycle.size()]) +
                                  " are not adjacent");
    product *= it->second;
  }
  return product;
}

/**
 * Independent balance oracle: grows a depth-first spanning forest and
 * multiplies the edge signs along the explicit fundamental cycle of every
 * non-tree edge.  Balanced iff all those products are +1.  Guarded by an
 * edge-count cap since the cycle walks are quadratic in the worst case.
 */
inline bool brute_force_balance(const SignedGraph& G) {
  if (G.edges.size() > 64)
    throw std::invalid_argument("brute_force_balance supports at most 64 edges");
  const int n = G.num_vertices();
  detail::GraphAdjacency adj(G);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<bool> tree_edge(G.edges.size(), false);

  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<int> stack{root};
    seen[static_cast<std::size_t>(root)] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      const auto& inc = adj.incident[static_cast<std::size_t>(u)];
      for (auto it = inc.rbegin(); it != inc.rend(); ++it) {
        const SignedEdge& e = G.edges[static_cast<std::size_t>(*it)];
        int v = detail::edge_other_end(G, e, u);
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = true;
        parent[static_cast<std::size_t>(v)] = u;
        parent_edge[static_cast<std::size_t>(v)] = *it;
        depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
        tree_edge[static_cast<std::size_t>(*it)] = true;
        stack.push_back(v);
      }
    }
  }

  const int nl = static_cast<int>(G.left.size());
  for (std::size_t ei = 0; ei < G.edges.size(); ++ei) {
    if (tree_edge[ei]) continue;
    const SignedEdge& e = G.edges[ei];
    int a = e.u, b = e.v + nl;
    int product = e.sign;
    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
      product *= G.edges[static_cast<std::size_t>(
                            parent_edge[static_cast<std::size_t>(a)])].sign;
      a = parent[static_cast<std::size_t>(a)];
    }
    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
      product *= G.edges[static_cast<std::size_t>(
                            parent_edge[static_cast<std::size_t>(b)])].sign;
      b = parent[static_cast<std::size_t>(b)];
    }
    while (a != b) {
      product *= G.edges[static_cast<std::size_t>(
                            parent_edge[static_cast<std::size_t>(a)])].sign;
      product *= G.edges[static_cast<std::size_t>(
                            parent_edge[static_cast<std::size_t>(b)])].sign;
      a = parent[static_cast<std::size_t>(a)];
      b = parent[static_cast<std::size_t>(b)];
    }
    if (product != 1) return false;
  }
  return true;
}

/// Re-checks a certificate against the graph it was issued for.
inline bool verify_certificate(const SignedGraph& G, const BalanceCertificate& cert) {
  if (cert.balanced) {
    if (static_cast<int>(cert.potential.size()) != G.num_vertices()) return false;
    for (const auto& [face, value] : cert.potential)
      if (value != 1 && value != -1) return false;
    const int nl = static_cast<int>(G.left.size());
    for (const SignedEdge& e : G.edges) {
      auto itu = cert.potential.find(G.face_of(e.u));
      auto itv = cert.potential.find(G.face_of(e.v + nl));
      if (itu == cert.potential.end() || itv == cert.potential.end()) return false;
      if (itu->second * itv->second != e.sign) return false;
    }
    return true;
  }
  if (cert.negative_cycle.empty()) return false;
  try {
    return cycle_sign(G, cert.negative_cycle) == -1;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace simplap
