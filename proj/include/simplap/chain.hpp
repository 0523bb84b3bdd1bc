#pragma once

/**
 * Weighted cochain machinery: face weights, coboundary matrices and the
 * weighted up/down Laplacians together with their signless and sign-twisted
 * variants.
 *
 * With D_i the coboundary matrix from i-cochains to (i+1)-cochains and W_i
 * the diagonal matrix of i-face weights,
 *
 *   up:    L_i^up   = W_i^-1 D_i^T W_{i+1} D_i
 *   down:  L_i^down = D_{i-1} W_{i-1}^-1 D_{i-1}^T W_i
 *   full:  L_i      = L_i^up + L_i^down
 *
 * and the signless versions replace D by its entrywise absolute value.
 * Every Laplacian returned here is similar to a symmetric positive
 * semidefinite matrix via conjugation with W_i^{1/2}.
 */

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simplap/complex.hpp"

namespace simplap {

/// A positive weight for every face of a complex, the empty face included.
class WeightFunction {
 public:
  double at(const Face& f) const {
    auto it = w_.find(f);
    if (it == w_.end())
      throw std::invalid_argument("weight undefined for face " + face_to_string(f));
    return it->second;
  }

  void set(const Face& f, double value) {
    if (!std::isfinite(value) || !(value > 0.0))
      throw std::invalid_argument("weights must be positive and finite (face " +
                                  face_to_string(f) + ")");
    w_[f] = value;
  }

  bool defined_for(const Face& f) const { return w_.count(f) > 0; }

  /// True when every face of K carries a weight.
  bool covers(const SimplicialComplex& K) const {
    for (int d = -1; d <= K.dim(); ++d)
      for (const Face& f : K.faces_of_dim(d))
        if (!w_.count(f)) return false;
    return true;
  }

  const std::map<Face, double>& entries() const { return w_; }

 private:
  std::map<Face, double> w_;
};

/// w ≡ 1 on every face of K.
inline WeightFunction unit_weights(const SimplicialComplex& K) {
  WeightFunction w;
  for (int d = -1; d <= K.dim(); ++d)
    for (const Face& f : K.faces_of_dim(d)) w.set(f, 1.0);
  return w;
}

/// Total weight of the cofaces one dimension up; zero exactly on facets.
inline double degree(const SimplicialComplex& K, const Face& f,
                     const WeightFunction& w) {
  if (!K.contains(f))
    throw std::invalid_argument("degree of a face outside the complex: " +
                                face_to_string(f));
  double sum = 0.0;
  for (const Face& g : K.faces_of_dim(face_dim(f) + 1))
    if (face_subset(f, g)) sum += w.at(g);
  return sum;
}

/**
 * The facet-normalized weights: every facet weighs 1 and every other face
 * weighs the sum of the weights of its cofaces one dimension up, filled in
 * decreasing dimension order.  The empty face ends up carrying the total
 * vertex weight.  Under this weighting w(F) = degree(F) for non-facets.
 */
inline WeightFunction normalized_weights(const SimplicialComplex& K) {
  WeightFunction w;
  std::set<Face> facets(K.facets().begin(), K.facets().end());
  for (int d = K.dim(); d >= -1; --d) {
    for (const Face& f : K.faces_of_dim(d)) {
      if (facets.count(f)) {
        w.set(f, 1.0);
        continue;
      }
      double sum = 0.0;
      for (const Face& g : K.faces_of_dim(d + 1))
        if (face_subset(f, g)) sum += w.at(g);
      w.set(f, sum);
    }
  }
  return w;
}

/// Coboundary matrix from i-cochains to (i+1)-cochains: rows indexed by the
/// (i+1)-faces, columns by the i-faces, both lexicographic; entries in
/// {-1, 0, +1}.  Level -1 gives the one-column augmentation matrix.
struct CoboundaryMatrix {
  int level = 0;
  Eigen::MatrixXi mat;
};

inline CoboundaryMatrix coboundary_matrix(const SimplicialComplex& K, int i,
                                          const OrientationAssignment& o) {
  if (i < -1 || i > K.dim() - 1)
    throw std::invalid_argument("coboundary level must satisfy -1 <= i <= dim-1");
  const auto& rows = K.faces_of_dim(i + 1);
  const auto& cols = K.faces_of_dim(i);
  CoboundaryMatrix D;
  D.level = i;
  D.mat.setZero(static_cast<Eigen::Index>(rows.size()),
                static_cast<Eigen::Index>(cols.size()));
  Face sub;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Face& fbar = rows[r];
    for (std::size_t omit = 0; omit < fbar.size(); ++omit) {
      sub.clear();
      for (std::size_t k = 0; k < fbar.size(); ++k)
        if (k != omit) sub.push_back(fbar[k]);
      int c = K.face_index(i, sub);
      D.mat(static_cast<Eigen::Index>(r), c) = incidence_sign(sub, fbar, o);
    }
  }
  return D;
}

enum class LaplacianKind {
  up,
  down,
  full,
  signless_up,
  signless_down,
  signed_up,
  signed_down,
};

inline std::string to_string(LaplacianKind k) {
  switch (k) {
    case LaplacianKind::up: return "up";
    case LaplacianKind::down: return "down";
    case LaplacianKind::full: return "full";
    case LaplacianKind::signless_up: return "signless_up";
    case LaplacianKind::signless_down: return "signless_down";
    case LaplacianKind::signed_up: return "signed_up";
    case LaplacianKind::signed_down: return "signed_down";
  }
  return "?";
}

/// A Laplacian acting on i-cochains (lexicographic face order), together
/// with the diagonal of W_i needed to symmetrize it.
struct LaplacianMatrix {
  LaplacianKind kind = LaplacianKind::up;
  int level = 0;
  Eigen::MatrixXd mat;
  Eigen::VectorXd weights;
};

namespace detail {

inline Eigen::VectorXd level_weights(const SimplicialComplex& K, int i,
                                     const WeightFunction& w) {
  const auto& faces = K.faces_of_dim(i);
  Eigen::VectorXd d(static_cast<Eigen::Index>(faces.size()));
  for (std::size_t k = 0; k < faces.size(); ++k)
    d[static_cast<Eigen::Index>(k)] = w.at(faces[k]);
  return d;
}

inline Eigen::MatrixXd up_from(const Eigen::MatrixXd& D,
                               const Eigen::VectorXd& wi,
                               const Eigen::VectorXd& wup) {
  return wi.cwiseInverse().asDiagonal() *
         (D.transpose() * wup.asDiagonal() * D);
}

inline Eigen::MatrixXd down_from(const Eigen::MatrixXd& B,
                                 const Eigen::VectorXd& wdown,
                                 const Eigen::VectorXd& wi) {
  return B * wdown.cwiseInverse().asDiagonal() * B.transpose() *
         wi.asDiagonal();
}

}  // namespace detail

/**
 * The weighted Laplacian of K at level i.  Valid levels: 0..dim-1 for the
 * up-type kinds (an (i+1)-face must exist), 0..dim for the down-type kinds
 * (level 0 uses the augmentation coboundary), and 0..dim-1 for `full`.
 */
inline LaplacianMatrix laplacian(const SimplicialComplex& K, int i,
                                 const WeightFunction& w,
                                 const OrientationAssignment& o,
                                 LaplacianKind kind) {
  const bool wants_up = kind == LaplacianKind::up ||
                        kind == LaplacianKind::signless_up ||
                        kind == LaplacianKind::full;
  const bool wants_down = kind == LaplacianKind::down ||
                          kind == LaplacianKind::signless_down ||
                          kind == LaplacianKind::full;
  if (kind == LaplacianKind::signed_up || kind == LaplacianKind::signed_down)
    throw std::invalid_argument("use signed_laplacian for sign-twisted kinds");
  if (wants_up && (i < 0 || i > K.dim() - 1))
    throw std::invalid_argument("level " + std::to_string(i) +
                                " invalid for an up Laplacian of a " +
                                std::to_string(K.dim()) + "-dimensional complex");
  if (wants_down && (i < 0 || i > K.dim()))
    throw std::invalid_argument("level " + std::to_string(i) +
                                " invalid for a down Laplacian of a " +
                                std::to_string(K.dim()) + "-dimensional complex");

  LaplacianMatrix L;
  L.kind = kind;
  L.level = i;
  L.weights = detail::level_weights(K, i, w);
  const Eigen::Index n = L.weights.size();
  L.mat.setZero(n, n);

  const bool signless = kind == LaplacianKind::signless_up ||
                        kind == LaplacianKind::signless_down;
  if (wants_up) {
    Eigen::MatrixXd D = coboundary_matrix(K, i, o).mat.cast<double>();
    if (signless) D = D.cwiseAbs();
    L.mat += detail::up_from(D, L.weights, detail::level_weights(K, i + 1, w));
  }
  if (wants_down) {
    Eigen::MatrixXd B = coboundary_matrix(K, i - 1, o).mat.cast<double>();
    if (signless) B = B.cwiseAbs();
    L.mat += detail::down_from(B, detail::level_weights(K, i - 1, w), L.weights);
  }
  return L;
}

/**
 * A sign for every incidence pair (face, coface one dimension up) of a
 * complex.  Values are restricted to {-1, +1}; a pair that is missing or
 * set to anything else fails validation.
 */
class IncidenceSignFunction {
 public:
  int at(const Face& f, const Face& fbar) const {
    auto it = s_.find({f, fbar});
    return it == s_.end() ? 0 : it->second;
  }

  void set(const Face& f, const Face& fbar, int sign) {
    if (sign != 1 && sign != -1)
      throw std::invalid_argument("incidence signs must be +1 or -1");
    s_[{f, fbar}] = sign;
  }

  /// ς ≡ +1: the sign-twisted Laplacian degenerates to the plain one.
  static IncidenceSignFunction all_plus(const SimplicialComplex& K) {
    IncidenceSignFunction s;
    s.fill(K, [](int) { return +1; });
    return s;
  }

  /// ς equal to the incidence signs themselves, so that the twisted
  /// coboundary becomes |D| and the Laplacian becomes the signless one.
  static IncidenceSignFunction from_orientation(const SimplicialComplex& K,
                                                const OrientationAssignment& o) {
    IncidenceSignFunction s;
    s.fill(K, [](int sign) { return sign; }, &o);
    return s;
  }

  /// Checks that the function is +/-1 exactly on the incidence pairs of K.
  void validate_for(const SimplicialComplex& K) const {
    std::size_t expected = 0;
    for (int d = -1; d < K.dim(); ++d) {
      for (const Face& fbar : K.faces_of_dim(d + 1)) {
        Face sub;
        for (std::size_t omit = 0; omit < fbar.size(); ++omit) {
          sub.clear();
          for (std::size_t k = 0; k < fbar.size(); ++k)
            if (k != omit) sub.push_back(fbar[k]);
          ++expected;
          int v = at(sub, fbar);
          if (v != 1 && v != -1)
            throw std::invalid_argument(
                "incidence sign function undefined (or zero) on incidence " +
                face_to_string(sub) + " < " + face_to_string(fbar));
        }
      }
    }
    if (s_.size() != expected)
      throw std::invalid_argument(
          "incidence sign function carries entries outside the incidence "
          "relation of the complex");
  }

 private:
  template <typename Fn>
  void fill(const SimplicialComplex& K, Fn value,
            const OrientationAssignment* o = nullptr) {
    OrientationAssignment canonical;
    const OrientationAssignment& use = o ? *o : canonical;
    for (int d = -1; d < K.dim(); ++d) {
      for (const Face& fbar : K.faces_of_dim(d + 1)) {
        Face sub;
        for (std::size_t omit = 0; omit < fbar.size(); ++omit) {
          sub.clear();
          for (std::size_t k = 0; k < fbar.size(); ++k)
            if (k != omit) sub.push_back(fbar[k]);
          s_[{sub, fbar}] = value(incidence_sign(sub, fbar, use));
        }
      }
    }
  }

  std::map<std::pair<Face, Face>, int> s_;
};

/**
 * Sign-twisted Laplacian: the coboundary entries are multiplied by ς before
 * forming the up (or down) product.  ς ≡ +1 recovers the plain Laplacian
 * and ς equal to the incidence signs recovers the signless one.
 */
inline LaplacianMatrix signed_laplacian(const SimplicialComplex& K, int i,
                                        const WeightFunction& w,
                                        const OrientationAssignment& o,
                                        const IncidenceSignFunction& sigma,
                                        LaplacianKind kind) {
  if (kind != LaplacianKind::signed_up && kind != LaplacianKind::signed_down)
    throw std::invalid_argument("signed_laplacian kind must be signed_up or signed_down");
  sigma.validate_for(K);
  const bool up = kind == LaplacianKind::signed_up;
  if (up && (i < 0 || i > K.dim() - 1))
    throw std::invalid_argument("level invalid for a signed up Laplacian");
  if (!up && (i < 0 || i > K.dim()))
    throw std::invalid_argument("level invalid for a signed down Laplacian");

  const int d = up ? i : i - 1;
  const auto& rows = K.faces_of_dim(d + 1);
  const auto& cols = K.faces_of_dim(d);
  Eigen::MatrixXd Ds(static_cast<Eigen::Index>(rows.size()),
                     static_cast<Eigen::Index>(cols.size()));
  Ds.setZero();
  Face sub;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Face& fbar = rows[r];
    for (std::size_t omit = 0; omit < fbar.size(); ++omit) {
      sub.clear();
      for (std::size_t k = 0; k < fbar.size(); ++k)
        if (k != omit) sub.push_back(fbar[k]);
      int c = K.face_index(d, sub);
      Ds(static_cast<Eigen::Index>(r), c) =
          incidence_sign(sub, fbar, o) * sigma.at(sub, fbar);
    }
  }

  LaplacianMatrix L;
  L.kind = kind;
  L.level = i;
  L.weights = detail::level_weights(K, i, w);
  if (up)
    L.mat = detail::up_from(Ds, L.weights, detail::level_weights(K, i + 1, w));
  else
    L.mat = detail::down_from(Ds, detail::level_weights(K, i - 1, w), L.weights);
  return L;
}

}  // namespace simplap
