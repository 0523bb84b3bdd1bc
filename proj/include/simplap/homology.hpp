#pragma once

/**
 * Reduced homology ranks over the rationals, computed exactly.
 *
 * Boundary ranks are taken with fraction-free (Bareiss) elimination over
 * arbitrary-precision integers, so Betti numbers carry no floating-point
 * uncertainty.  The chain complex is augmented: the boundary of a vertex is
 * the empty face, which makes the degree-0 number the reduced one
 * (connected components minus one).  The harmonic dimension — the kernel
 * dimension of the full weighted Laplacian — must agree with the Betti
 * number at every level for any positive weighting.
 */

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

#include "simplap/chain.hpp"
#include "simplap/complex.hpp"
#include "simplap/spectra.hpp"

namespace simplap {

/// Eigenvalues below this threshold count as kernel members when measuring
/// harmonic dimensions.
inline constexpr double kHarmonicKernelTol = 1e-7;

/// Exact rank of an integer matrix by fraction-free Gaussian elimination
/// (Bareiss).  Entries grow as minors, hence the big-integer arithmetic.
inline int bareiss_rank(const Eigen::MatrixXi& M) {
  using boost::multiprecision::cpp_int;
  const int rows = static_cast<int>(M.rows());
  const int cols = static_cast<int>(M.cols());
  std::vector<std::vector<cpp_int>> a(static_cast<std::size_t>(rows),
                                      std::vector<cpp_int>(static_cast<std::size_t>(cols)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = M(r, c);

  cpp_int prev = 1;
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(row)], a[static_cast<std::size_t>(pivot)]);
    const cpp_int& p = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    for (int r = row + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        cpp_int t = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * p -
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] *
                        a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = t / prev;
      }
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = 0;
    }
    prev = p;
    ++rank;
    ++row;
  }
  return rank;
}

/// Reduced Betti numbers, index i in 0..dim.  Empty for the complex {∅}.
using BettiVector = std::vector<int>;

inline BettiVector betti_numbers(const SimplicialComplex& K) {
  BettiVector out;
  if (K.dim() < 0) return out;
  OrientationAssignment canonical;
  // rank ∂_i = rank D_{i-1}: the boundary matrix is the transpose of the
  // coboundary one level down, and the augmentation D_{-1} is included.
  std::vector<int> rank_d(static_cast<std::size_t>(K.dim()) + 2, 0);
  for (int i = 0; i <= K.dim(); ++i)
    rank_d[static_cast<std::size_t>(i)] =
        bareiss_rank(coboundary_matrix(K, i - 1, canonical).mat);
  for (int i = 0; i <= K.dim(); ++i) {
    int ni = static_cast<int>(K.faces_of_dim(i).size());
    out.push_back(ni - rank_d[static_cast<std::size_t>(i)] -
                  rank_d[static_cast<std::size_t>(i) + 1]);
  }
  return out;
}

/// True when every reduced Betti number vanishes.
inline bool is_acyclic(const SimplicialComplex& K) {
  for (int b : betti_numbers(K))
    if (b != 0) return false;
  return true;
}

/**
 * Kernel dimension of the full weighted Laplacian at level i, counted as
 * the number of eigenvalues below kHarmonicKernelTol.  At the top dimension
 * the up part is empty and the full Laplacian degenerates to the down one.
 */
inline int harmonic_dimension(const SimplicialComplex& K, int i,
                              const WeightFunction& w) {
  if (i < 0 || i > K.dim())
    throw std::invalid_argument("harmonic_dimension level out of range");
  OrientationAssignment canonical;
  LaplacianMatrix L =
      (i < K.dim()) ? laplacian(K, i, w, canonical, LaplacianKind::full)
                    : laplacian(K, i, w, canonical, LaplacianKind::down);
  Spectrum s = eigenvalues(L);
  int count = 0;
  for (double v : s.values)
    if (v < kHarmonicKernelTol) ++count;
  return count;
}

}  // namespace simplap
