#pragma once

/**
 * Abstract simplicial complexes over integer vertex labels.
 *
 * A complex is stored as its full face list grouped by dimension, with every
 * list kept in lexicographic order so that matrix rows/columns and all
 * reports are reproducible byte for byte.  The empty face (dimension -1) is
 * a member of every complex and indexes the augmentation level of the chain
 * complex.
 */

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace simplap {

/// Vertex label.  Labels are totally ordered by < and need not be dense.
using Vertex = int;

/// A face is a strictly increasing list of vertex labels; the empty vector
/// is the empty face of dimension -1.
using Face = std::vector<Vertex>;

/// Dimension of a face: one less than its cardinality.
inline int face_dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

inline std::string face_to_string(const Face& f) {
  std::string s = "{";
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(f[k]);
  }
  return s + "}";
}

/// True if every vertex of `sub` also occurs in `sup` (both sorted).
inline bool face_subset(const Face& sub, const Face& sup) {
  return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

/// Sorts a vertex list into a face, rejecting repeated vertices.
inline Face make_face(Face f) {
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end())
    throw std::invalid_argument("malformed face (repeated vertex): " +
                                face_to_string(f));
  return f;
}

/// Orders faces by dimension first, then lexicographically.  This is the
/// display order used for mixed-dimension face sets.
inline bool face_order_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/**
 * A finite abstract simplicial complex: a family of faces closed under
 * taking subsets.  Instances are immutable; they are built through
 * from_facets / from_faces, which close the input downward and recompute
 * the facet list.
 */
class SimplicialComplex {
 public:
  /// The complex {∅} with no vertices.
  SimplicialComplex() : by_dim_(1) {
    by_dim_[0].push_back(Face{});
    facets_.push_back(Face{});
  }

  /// Builds the downward closure of the given faces.  Duplicates and faces
  /// of other faces are absorbed; vertex lists may be unsorted but must not
  /// repeat a vertex.
  static SimplicialComplex from_facets(const std::vector<Face>& facets) {
    return from_faces(facets);
  }

  /// Same as from_facets; the name documents intent when the input is an
  /// arbitrary face family rather than a facet list.
  static SimplicialComplex from_faces(const std::vector<Face>& faces) {
    std::set<Face> all;
    all.insert(Face{});
    for (const Face& raw : faces) all.insert(make_face(raw));
    // Close downward one dimension at a time, starting from the top.
    int top = -1;
    for (const Face& f : all) top = std::max(top, face_dim(f));
    for (int d = top; d > 0; --d) {
      std::vector<Face> level;
      for (const Face& f : all)
        if (face_dim(f) == d) level.push_back(f);
      for (const Face& f : level) {
        Face sub(f.size() - 1);
        for (std::size_t omit = 0; omit < f.size(); ++omit) {
          sub.clear();
          for (std::size_t k = 0; k < f.size(); ++k)
            if (k != omit) sub.push_back(f[k]);
          all.insert(sub);
        }
      }
    }
    SimplicialComplex K;
    K.by_dim_.assign(static_cast<std::size_t>(top + 2), {});
    for (const Face& f : all) K.by_dim_[static_cast<std::size_t>(face_dim(f) + 1)].push_back(f);
    for (auto& level : K.by_dim_) std::sort(level.begin(), level.end());
    K.recompute_facets();
    return K;
  }

  /// Dimension of the complex; -1 when only the empty face is present.
  int dim() const { return static_cast<int>(by_dim_.size()) - 2; }

  /// Faces of dimension i in lexicographic order.  i = -1 yields the empty
  /// face; i beyond the dimension yields an empty list; i < -1 is an error.
  const std::vector<Face>& faces_of_dim(int i) const {
    if (i < -1) throw std::invalid_argument("face dimension must be >= -1");
    static const std::vector<Face> kNone;
    if (i > dim()) return kNone;
    return by_dim_[static_cast<std::size_t>(i + 1)];
  }

  /// Inclusion-maximal faces.  For the complex {∅} this is [∅].
  const std::vector<Face>& facets() const { return facets_; }

  /// Sorted vertex labels.
  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (const Face& f : faces_of_dim(0)) out.push_back(f[0]);
    return out;
  }

  /// Membership test; `f` must be in make_face form.
  bool contains(const Face& f) const {
    return face_index(face_dim(f), f) >= 0;
  }

  /// Position of `f` within faces_of_dim(i), or -1 if absent.
  int face_index(int i, const Face& f) const {
    if (i < -1 || i > dim()) return (i == -1 ? -1 : -1);
    const auto& level = faces_of_dim(i);
    auto it = std::lower_bound(level.begin(), level.end(), f);
    if (it == level.end() || *it != f) return -1;
    return static_cast<int>(it - level.begin());
  }

  /// Total number of faces, the empty face included.
  std::size_t total_faces() const {
    std::size_t n = 0;
    for (const auto& level : by_dim_) n += level.size();
    return n;
  }

  /// All faces ordered by (dimension, lexicographic), the empty face first.
  std::vector<Face> all_faces() const {
    std::vector<Face> out;
    out.reserve(total_faces());
    for (const auto& level : by_dim_)
      for (const Face& f : level) out.push_back(f);
    return out;
  }

  /// The p-skeleton: all faces of dimension <= p.  p = -1 yields {∅}.
  SimplicialComplex skeleton(int p) const {
    if (p < -1) throw std::invalid_argument("skeleton dimension must be >= -1");
    std::vector<Face> keep;
    for (int d = 0; d <= std::min(p, dim()); ++d)
      for (const Face& f : faces_of_dim(d)) keep.push_back(f);
    return from_faces(keep);
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.by_dim_ == b.by_dim_;
  }

 private:
  void recompute_facets() {
    facets_.clear();
    if (dim() < 0) {
      facets_.push_back(Face{});
      return;
    }
    // A face is maximal iff it is not the boundary of any face one
    // dimension up.
    std::set<Face> covered;
    for (int d = 1; d <= dim(); ++d) {
      for (const Face& f : faces_of_dim(d)) {
        Face sub;
        for (std::size_t omit = 0; omit < f.size(); ++omit) {
          sub.clear();
          for (std::size_t k = 0; k < f.size(); ++k)
            if (k != omit) sub.push_back(f[k]);
          covered.insert(sub);
        }
      }
    }
    for (int d = 0; d <= dim(); ++d)
      for (const Face& f : faces_of_dim(d))
        if (!covered.count(f)) facets_.push_back(f);
  }

  // Slot d+1 holds the faces of dimension d, each list lexicographic.
  std::vector<std::vector<Face>> by_dim_;
  std::vector<Face> facets_;
};

/**
 * A choice of orientation for every face, expressed relative to the
 * canonical orientation (vertices in increasing order).  flip(F) is -1 for
 * faces whose orientation has been reversed and +1 otherwise; the empty
 * face is pinned at +1.
 */
class OrientationAssignment {
 public:
  OrientationAssignment() = default;

  static OrientationAssignment from_flips(const std::vector<Face>& faces) {
    OrientationAssignment o;
    for (const Face& f : faces) {
      if (face_dim(f) < 0)
        throw std::invalid_argument("cannot reorient the empty face");
      if (!o.flipped_.insert(make_face(f)).second)
        throw std::invalid_argument("face flipped twice: " + face_to_string(f));
    }
    return o;
  }

  int flip(const Face& f) const { return flipped_.count(f) ? -1 : +1; }

  bool is_canonical() const { return flipped_.empty(); }

  const std::set<Face>& flipped_faces() const { return flipped_; }

  friend bool operator==(const OrientationAssignment&,
                         const OrientationAssignment&) = default;

 private:
  friend OrientationAssignment reorient(const OrientationAssignment&, const Face&);
  std::set<Face> flipped_;
};

/// Returns a copy of `o` with the orientation of `f` reversed.  Applying it
/// twice restores the original assignment.
inline OrientationAssignment reorient(const OrientationAssignment& o, const Face& f) {
  if (face_dim(f) < 0)
    throw std::invalid_argument("cannot reorient the empty face");
  OrientationAssignment r = o;
  if (r.flipped_.erase(f) == 0) r.flipped_.insert(f);
  return r;
}

/**
 * Incidence sign between an oriented face [F] and an oriented coface [F̄]
 * one dimension up: 0 when F is not contained in F̄, otherwise (-1)^j for
 * the position j of the omitted vertex within F̄, times the two orientation
 * flips.  Under the canonical orientation the signs of the boundary of any
 * face alternate +,-,+,... in omission order.
 */
inline int incidence_sign(const Face& f, const Face& fbar,
                          const OrientationAssignment& o) {
  if (face_dim(fbar) != face_dim(f) + 1)
    throw std::invalid_argument(
        "incidence_sign requires dim(coface) == dim(face) + 1; got " +
        face_to_string(f) + " and " + face_to_string(fbar));
  if (!face_subset(f, fbar)) return 0;
  // Both are sorted, so the omitted vertex sits at the first mismatch.
  std::size_t j = f.size();
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (fbar[k] != f[k]) {
      j = k;
      break;
    }
  }
  int sign = (j % 2 == 0) ? +1 : -1;
  return sign * o.flip(f) * o.flip(fbar);
}

/**
 * Whether the complex is (i+1)-path connected: the bipartite incidence
 * graph on the i- and (i+1)-faces is connected and every i-face lies in at
 * least one (i+1)-face.  Equivalently, any two (i+1)-faces are joined by a
 * chain of (i+1)-faces overlapping in i-faces, and no i-face is stranded.
 */
inline bool is_path_connected(const SimplicialComplex& K, int i) {
  if (i < 0 || i > K.dim())
    throw std::invalid_argument("is_path_connected level out of range");
  const auto& lo = K.faces_of_dim(i);
  const auto& hi = K.faces_of_dim(i + 1);
  const int nl = static_cast<int>(lo.size());
  const int nh = static_cast<int>(hi.size());
  // Adjacency of the bipartite graph: vertex ids 0..nl-1 are i-faces,
  // nl..nl+nh-1 are (i+1)-faces.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nl + nh));
  std::vector<bool> covered(static_cast<std::size_t>(nl), false);
  for (int r = 0; r < nh; ++r) {
    const Face& fbar = hi[static_cast<std::size_t>(r)];
    Face sub;
    for (std::size_t omit = 0; omit < fbar.size(); ++omit) {
      sub.clear();
      for (std::size_t k = 0; k < fbar.size(); ++k)
        if (k != omit) sub.push_back(fbar[k]);
      int u = K.face_index(i, sub);
      adj[static_cast<std::size_t>(u)].push_back(nl + r);
      adj[static_cast<std::size_t>(nl + r)].push_back(u);
      covered[static_cast<std::size_t>(u)] = true;
    }
  }
  for (bool c : covered)
    if (!c) return false;
  if (nl + nh == 0) return false;
  std::vector<bool> seen(static_cast<std::size_t>(nl + nh), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    ++reached;
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        q.push(v);
      }
    }
  }
  return reached == nl + nh;
}

}  // namespace simplap
