#include "cfopt/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cfopt {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& A) {
  double s = 0.0;
  for (Eigen::Index p = 0; p < A.rows(); ++p) {
    for (Eigen::Index q = p + 1; q < A.cols(); ++q) s += A(p, q) * A(p, q);
  }
  return std::sqrt(2.0 * s);
}

}  // namespace

SymmetricEigen jacobi_eigh(Eigen::MatrixXd A, double off_tol, int max_sweeps) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("jacobi_eigh: matrix not square");

  Eigen::MatrixXd V = Eigen::MatrixXd::Identity(n, n);
  const double scale = std::max(A.norm(), 1e-300);
  const double stop = off_tol * scale;

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(A) <= stop) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        // Rotations on entries already far below the target accuracy only
        // stir roundoff around.
        if (std::abs(apq) <= 1e-3 * stop / static_cast<double>(n)) continue;

        const double diff = A(q, q) - A(p, p);
        double t;
        if (std::abs(apq) < std::abs(diff) * 1e-36) {
          t = apq / diff;
        } else {
          const double phi = diff / (2.0 * apq);
          t = 1.0 / (std::abs(phi) + std::sqrt(phi * phi + 1.0));
          if (phi < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // A <- J^T A J with the rotation acting in the (p, q) plane.
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = A(k, p);
          const double akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = A(p, k);
          const double aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = V(k, p);
          const double vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (sweep == max_sweeps && off_diagonal_norm(A) > stop) {
    throw std::runtime_error("jacobi_eigh: no convergence within sweep limit");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&A](Eigen::Index a, Eigen::Index b) { return A(a, a) < A(b, b); });

  SymmetricEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues(i) = A(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
    out.eigenvectors.col(i) = V.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace cfopt
