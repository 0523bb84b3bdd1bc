#pragma once

/**
 * Complex constructions with predictable incidence-graph balance:
 *
 *  - wedge_sum: glue two complexes along a common k-face via an explicit
 *    vertex bijection.  At level i >= k-1 the incidence graph of the wedge
 *    is balanced exactly when both summands are; at level i <= k-2 (k >= 2)
 *    it is always unbalanced.
 *  - join: all unions F1 ∪ F2; unbalanced at level i once
 *    dim K1 + dim K2 >= i+1.
 *  - cartesian_product: prism-style product whose faces are rows F×v and
 *    columns u×F'.  Level-0 up-Laplacian spectra add as a sumset, and for
 *    i >= 1 the level-i incidence graph splits into disjoint copies of the
 *    factors' graphs.
 *  - duplicate_motif: doubles a vertex-induced subcomplex across its link,
 *    preserving the complex up to relabeling and preserving balance.
 *  - wedge_chain: an iterated wedge of simplices — connected, balanced and
 *    acyclic at its level, used as a well-understood test family.
 */

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simplap/chain.hpp"
#include "simplap/complex.hpp"

namespace simplap {

namespace detail {

inline void require_disjoint_vertices(const SimplicialComplex& a,
                                      const SimplicialComplex& b,
                                      const char* what) {
  std::vector<Vertex> va = a.vertices(), vb = b.vertices();
  std::vector<Vertex> overlap;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty())
    throw std::invalid_argument(std::string(what) +
                                " requires disjoint vertex sets; shared label " +
                                std::to_string(overlap.front()));
}

inline std::vector<Vertex> face_union_vertices(const std::vector<Face>& faces) {
  std::set<Vertex> vs;
  for (const Face& f : faces) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

}  // namespace detail

struct WedgeSpec {
  SimplicialComplex k1, k2;
  Face f1, f2;  // faces of equal dimension k in k1 and k2
  /// Bijection f1 -> f2 as (vertex of f1, vertex of f2) pairs.
  std::vector<std::pair<Vertex, Vertex>> phi;
};

/**
 * Glues k2 onto k1 by identifying f2 with f1 through phi; vertices of k2
 * outside f2 keep their labels, which is why the two vertex sets must be
 * disjoint.  The result has |V1| + |V2| - (k+1) vertices.
 */
inline SimplicialComplex wedge_sum(const WedgeSpec& spec) {
  if (!spec.k1.contains(spec.f1))
    throw std::invalid_argument("wedge_sum: f1 is not a face of the first complex");
  if (!spec.k2.contains(spec.f2))
    throw std::invalid_argument("wedge_sum: f2 is not a face of the second complex");
  if (face_dim(spec.f1) != face_dim(spec.f2) || face_dim(spec.f1) < 0)
    throw std::invalid_argument("wedge_sum: identified faces must share a dimension >= 0");
  detail::require_disjoint_vertices(spec.k1, spec.k2, "wedge_sum");

  std::map<Vertex, Vertex> back;  // f2 vertex -> f1 vertex
  std::set<Vertex> dom, img;
  for (auto [a, b] : spec.phi) {
    dom.insert(a);
    img.insert(b);
    back[b] = a;
  }
  std::set<Vertex> f1v(spec.f1.begin(), spec.f1.end());
  std::set<Vertex> f2v(spec.f2.begin(), spec.f2.end());
  if (dom != f1v || img != f2v || back.size() != spec.phi.size())
    throw std::invalid_argument("wedge_sum: phi must be a bijection from f1 onto f2");

  std::vector<Face> faces = spec.k1.all_faces();
  for (const Face& f : spec.k2.all_faces()) {
    Face g;
    g.reserve(f.size());
    for (Vertex v : f) {
      auto it = back.find(v);
      g.push_back(it == back.end() ? v : it->second);
    }
    faces.push_back(make_face(std::move(g)));
  }
  return SimplicialComplex::from_faces(faces);
}

/// The join: every union of a face of k1 with a face of k2.  Dimension is
/// dim K1 + dim K2 + 1; the join with a single point is the cone.
inline SimplicialComplex join(const SimplicialComplex& k1,
                              const SimplicialComplex& k2) {
  detail::require_disjoint_vertices(k1, k2, "join");
  std::vector<Face> faces;
  for (const Face& a : k1.all_faces()) {
    for (const Face& b : k2.all_faces()) {
      Face u;
      u.reserve(a.size() + b.size());
      std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
      faces.push_back(std::move(u));
    }
  }
  return SimplicialComplex::from_faces(faces);
}

struct ProductResult {
  SimplicialComplex complex;
  WeightFunction weights;
  /// vertex_pairs[k] is the (k1 vertex, k2 vertex) pair behind label k.
  std::vector<std::pair<Vertex, Vertex>> vertex_pairs;
};

/**
 * Cartesian product over the vertex grid V1 × V2, with faces F×v and u×F'
 * only (rows and columns of the grid).  Face weights are inherited from the
 * factor supplying the face, which forces all vertex weights of both
 * factors to agree; violations are reported by vertex pair.  The pair grid
 * is relabeled 0..|V1|·|V2|-1 in lexicographic (u,v) order.
 */
inline ProductResult cartesian_product(const SimplicialComplex& k1,
                                       const WeightFunction& w1,
                                       const SimplicialComplex& k2,
                                       const WeightFunction& w2) {
  const std::vector<Vertex> v1 = k1.vertices(), v2 = k2.vertices();
  for (Vertex u : v1) {
    for (Vertex v : v2) {
      if (w1.at({u}) != w2.at({v}))
        throw std::invalid_argument(
            "cartesian_product: vertex weights differ on pair (" +
            std::to_string(u) + ", " + std::to_string(v) + "): " +
            std::to_string(w1.at({u})) + " vs " + std::to_string(w2.at({v})));
    }
  }

  ProductResult out;
  std::map<std::pair<Vertex, Vertex>, Vertex> label;
  for (Vertex u : v1)
    for (Vertex v : v2) {
      label[{u, v}] = static_cast<Vertex>(out.vertex_pairs.size());
      out.vertex_pairs.emplace_back(u, v);
    }

  std::vector<Face> faces;
  std::map<Face, double> wmap;
  for (Vertex v : v2) {
    for (int d = 0; d <= k1.dim(); ++d) {
      for (const Face& f : k1.faces_of_dim(d)) {
        Face g;
        g.reserve(f.size());
        for (Vertex u : f) g.push_back(label[{u, v}]);
        std::sort(g.begin(), g.end());
        wmap.emplace(g, w1.at(f));
        faces.push_back(std::move(g));
      }
    }
  }
  for (Vertex u : v1) {
    for (int d = 1; d <= k2.dim(); ++d) {  // d = 0 already covered above
      for (const Face& f : k2.faces_of_dim(d)) {
        Face g;
        g.reserve(f.size());
        for (Vertex v : f) g.push_back(label[{u, v}]);
        std::sort(g.begin(), g.end());
        wmap.emplace(g, w2.at(f));
        faces.push_back(std::move(g));
      }
    }
  }
  out.complex = SimplicialComplex::from_faces(faces);
  for (const auto& [f, value] : wmap) out.weights.set(f, value);
  out.weights.set(Face{}, w1.at(Face{}));
  return out;
}

namespace detail {

inline void require_faces_of(const SimplicialComplex& K,
                             const std::vector<Face>& S, const char* what) {
  for (const Face& f : S)
    if (!K.contains(f))
      throw std::invalid_argument(std::string(what) +
                                  ": face not in the complex: " + face_to_string(f));
}

inline std::set<Face> closure_set(const std::vector<Face>& S) {
  std::set<Face> out;
  out.insert(Face{});
  for (const Face& f : S) {
    const std::size_t m = f.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      Face sub;
      for (std::size_t k = 0; k < m; ++k)
        if (mask & (std::size_t{1} << k)) sub.push_back(f[k]);
      out.insert(std::move(sub));
    }
  }
  return out;
}

/// Faces of K containing at least one nonempty member of S.  The empty
/// face never acts as a witness (every face would qualify otherwise).
inline std::set<Face> star_set(const SimplicialComplex& K,
                               const std::set<Face>& S) {
  std::set<Face> out;
  for (const Face& g : K.all_faces()) {
    for (const Face& f : S) {
      if (f.empty()) continue;
      if (face_subset(f, g)) {
        out.insert(g);
        break;
      }
    }
  }
  return out;
}

inline std::vector<Face> sorted_face_list(const std::set<Face>& s) {
  std::vector<Face> out(s.begin(), s.end());
  std::sort(out.begin(), out.end(), face_order_less);
  return out;
}

}  // namespace detail

/// Smallest subcomplex containing S, as a face list in (dim, lex) order.
inline std::vector<Face> closure(const SimplicialComplex& K,
                                 const std::vector<Face>& S) {
  detail::require_faces_of(K, S, "closure");
  return detail::sorted_face_list(detail::closure_set(S));
}

/// All faces of K having a (nonempty) face in S.
inline std::vector<Face> star(const SimplicialComplex& K,
                              const std::vector<Face>& S) {
  detail::require_faces_of(K, S, "star");
  std::set<Face> s(S.begin(), S.end());
  return detail::sorted_face_list(detail::star_set(K, s));
}

/// link(S) = closure(star(S)) minus star(closure(S)), as a face list.
inline std::vector<Face> link(const SimplicialComplex& K,
                              const std::vector<Face>& S) {
  detail::require_faces_of(K, S, "link");
  std::set<Face> s(S.begin(), S.end());
  std::set<Face> cl_st = detail::closure_set(
      detail::sorted_face_list(detail::star_set(K, s)));
  std::set<Face> st_cl = detail::star_set(K, detail::closure_set(S));
  std::vector<Face> out;
  for (const Face& f : cl_st)
    if (!st_cl.count(f)) out.push_back(f);
  std::sort(out.begin(), out.end(), face_order_less);
  return out;
}

/// A vertex-induced subcomplex marked for duplication.
struct MotifSpec {
  SimplicialComplex k;
  std::vector<Vertex> motif_vertices;
};

namespace detail {

struct MotifData {
  std::set<Vertex> sigma_vertices;
  std::vector<Face> sigma_faces;  // the induced subcomplex, (dim, lex) order
  std::vector<Face> link_faces;
  int link_dim = -1;
  bool condition1 = false;
};

inline MotifData analyze_motif(const MotifSpec& spec) {
  MotifData m;
  if (spec.motif_vertices.empty())
    throw std::invalid_argument("motif vertex set must be nonempty");
  std::vector<Vertex> kv = spec.k.vertices();
  std::set<Vertex> kvset(kv.begin(), kv.end());
  for (Vertex v : spec.motif_vertices) {
    if (!kvset.count(v))
      throw std::invalid_argument("motif vertex " + std::to_string(v) +
                                  " is not a vertex of the complex");
    m.sigma_vertices.insert(v);
  }
  for (const Face& f : spec.k.all_faces()) {
    bool inside = true;
    for (Vertex v : f)
      if (!m.sigma_vertices.count(v)) {
        inside = false;
        break;
      }
    if (inside) m.sigma_faces.push_back(f);
  }
  // Containment condition: a face of the ambient complex holding two
  // distinct nonempty motif faces must itself belong to the motif.
  m.condition1 = true;
  for (const Face& f1 : m.sigma_faces) {
    if (f1.empty() || !m.condition1) continue;
    for (const Face& f2 : m.sigma_faces) {
      if (f2.empty() || f2 == f1) continue;
      for (const Face& g : spec.k.all_faces()) {
        if (!face_subset(f1, g) || !face_subset(f2, g)) continue;
        bool g_inside = true;
        for (Vertex v : g)
          if (!m.sigma_vertices.count(v)) {
            g_inside = false;
            break;
          }
        if (!g_inside) {
          m.condition1 = false;
          break;
        }
      }
      if (!m.condition1) break;
    }
  }
  m.link_faces = link(spec.k, m.sigma_faces);
  for (const Face& f : m.link_faces) m.link_dim = std::max(m.link_dim, face_dim(f));
  return m;
}

}  // namespace detail

/// True when the induced subcomplex satisfies the containment condition and
/// its link has dimension exactly i.
inline bool validate_i_motif(const MotifSpec& spec, int i) {
  if (i < 0) throw std::invalid_argument("motif level must be >= 0");
  detail::MotifData m = detail::analyze_motif(spec);
  return m.condition1 && m.link_dim == i;
}

struct DuplicationResult {
  SimplicialComplex complex;
  /// Original motif vertex -> its primed twin.
  std::vector<std::pair<Vertex, Vertex>> primed;
};

/**
 * Doubles the motif: a fresh primed copy of the induced subcomplex is
 * attached along the motif's link.  Every face that meets the motif and
 * stays within motif ∪ link vertices is replicated with primed motif
 * vertices.  Replacing the original star by the primed one reproduces the
 * input complex up to relabeling, which is verified before returning.
 */
inline DuplicationResult duplicate_motif(const MotifSpec& spec) {
  detail::MotifData m = detail::analyze_motif(spec);
  if (!m.condition1)
    throw std::invalid_argument(
        "duplicate_motif: motif violates the containment condition");
  if (m.link_dim < 0)
    throw std::invalid_argument("duplicate_motif: motif link is empty");

  std::vector<Vertex> kv = spec.k.vertices();
  Vertex next = kv.empty() ? 0 : kv.back() + 1;
  std::map<Vertex, Vertex> prime;
  DuplicationResult out;
  for (Vertex v : m.sigma_vertices) {
    prime[v] = next;
    out.primed.emplace_back(v, next);
    ++next;
  }

  std::vector<Face> faces = spec.k.all_faces();
  std::vector<Face> primed_faces;
  for (const Face& g : spec.k.all_faces()) {
    bool meets = false;
    for (Vertex v : g)
      if (m.sigma_vertices.count(v)) {
        meets = true;
        break;
      }
    if (!meets) continue;
    Face h;
    h.reserve(g.size());
    for (Vertex v : g) {
      auto it = prime.find(v);
      h.push_back(it == prime.end() ? v : it->second);
    }
    h = make_face(std::move(h));
    primed_faces.push_back(h);
    faces.push_back(std::move(h));
  }
  out.complex = SimplicialComplex::from_faces(faces);

  // Swap check: dropping the original star and keeping the primed one must
  // reproduce the input complex under v -> v'.
  {
    std::set<Face> original_star;
    for (const Face& g : spec.k.all_faces()) {
      for (Vertex v : g)
        if (m.sigma_vertices.count(v)) {
          original_star.insert(g);
          break;
        }
    }
    std::set<Face> swapped;
    for (const Face& g : spec.k.all_faces())
      if (!original_star.count(g)) swapped.insert(g);
    for (const Face& g : primed_faces) swapped.insert(g);

    std::set<Face> relabeled;
    for (const Face& g : spec.k.all_faces()) {
      Face h;
      h.reserve(g.size());
      for (Vertex v : g) {
        auto it = prime.find(v);
        h.push_back(it == prime.end() ? v : it->second);
      }
      relabeled.insert(make_face(std::move(h)));
    }
    if (relabeled != swapped)
      throw std::logic_error(
          "duplicate_motif: swap invariant failed (primed star does not "
          "reproduce the complex)");
  }
  return out;
}

/**
 * The chain of p+1 copies of the full (i+1)-simplex, each glued to the
 * previous copy along an i-face containing the previous fresh vertex.  For
 * i = 0 this is a path of p+1 edges.  The result is (i+1)-path connected,
 * acyclic and has a balanced level-i incidence graph.
 */
inline SimplicialComplex wedge_chain(int i, int p) {
  if (i < 0 || p < 0)
    throw std::invalid_argument("wedge_chain requires i >= 0 and p >= 0");
  // Copy t lives on the label window {t, ..., t+i+1}; dropping the smallest
  // vertex of one copy gives the i-face shared with the next.
  std::vector<Face> facets;
  for (int t = 0; t <= p; ++t) {
    Face f(static_cast<std::size_t>(i) + 2);
    for (int k = 0; k <= i + 1; ++k) f[static_cast<std::size_t>(k)] = t + k;
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace simplap
