#pragma once

/**
 * Cyclic Jacobi eigendecomposition for dense symmetric matrices.
 *
 * The classic two-sided rotation scheme: sweep the strict upper triangle in
 * row order, annihilating each off-diagonal entry with a Givens rotation,
 * and repeat until every off-diagonal magnitude drops below a fixed
 * fraction of the Frobenius norm of the input.  The sweep order is fixed,
 * so for a given input matrix the result is bit-for-bit reproducible.
 * Convergence is quadratic once the matrix is nearly diagonal; the matrices
 * handled here (a few hundred rows at most) settle in well under a dozen
 * sweeps.
 */

#include <Eigen/Dense>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace simplap {

struct JacobiResult {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // column k belongs to eigenvalues[k]
  int sweeps = 0;
};

/// Relative off-diagonal threshold: rotations stop once every |a_pq| is
/// below this multiple of the Frobenius norm of the input.
inline constexpr double kJacobiRelTol = 1e-12;

inline JacobiResult jacobi_eigensymm(Eigen::MatrixXd A,
                                     double rel_tol = kJacobiRelTol,
                                     int max_sweeps = 100) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("jacobi_eigensymm requires a square matrix");
  if (!A.allFinite())
    throw std::invalid_argument("jacobi_eigensymm requires finite entries");
  const Eigen::Index n = A.rows();
  A = ((A + A.transpose()) * 0.5).eval();  // enforce exact symmetry

  JacobiResult out;
  out.eigenvectors = Eigen::MatrixXd::Identity(n, n);
  if (n == 0) {
    out.eigenvalues.resize(0);
    return out;
  }

  const double fro = A.norm();
  const double threshold = rel_tol * fro;
  Eigen::MatrixXd& V = out.eigenvectors;

  auto max_offdiag = [&]() {
    double m = 0.0;
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q)
        m = std::max(m, std::abs(A(p, q)));
    return m;
  };

  if (fro > 0.0) {
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      if (max_offdiag() <= threshold) {
        converged = true;
        break;
      }
      ++out.sweeps;
      for (Eigen::Index p = 0; p + 1 < n; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
          const double apq = A(p, q);
          if (apq == 0.0) continue;
          const double tau = (A(q, q) - A(p, p)) / (2.0 * apq);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const double app = A(p, p), aqq = A(q, q);
          for (Eigen::Index k = 0; k < n; ++k) {
            if (k == p || k == q) continue;
            const double akp = A(k, p), akq = A(k, q);
            A(k, p) = A(p, k) = c * akp - s * akq;
            A(k, q) = A(q, k) = s * akp + c * akq;
          }
          A(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
          A(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
          A(p, q) = A(q, p) = 0.0;
          for (Eigen::Index k = 0; k < n; ++k) {
            const double vkp = V(k, p), vkq = V(k, q);
            V(k, p) = c * vkp - s * vkq;
            V(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
    if (!converged && max_offdiag() > threshold)
      throw std::runtime_error("jacobi_eigensymm did not converge");
  }

  // Sort ascending, carrying the eigenvector columns along.
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return A(a, a) < A(b, b); });
  out.eigenvalues.resize(n);
  Eigen::MatrixXd sortedV(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues[k] = A(perm[static_cast<std::size_t>(k)],
                           perm[static_cast<std::size_t>(k)]);
    sortedV.col(k) = V.col(perm[static_cast<std::size_t>(k)]);
  }
  out.eigenvectors = std::move(sortedV);
  return out;
}

}  // namespace simplap
