#pragma once

#include <Eigen/Core>

namespace cfopt {

struct SymmetricEigen {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // columns, A = V * diag(w) * V^T
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Sweeps until the
/// off-diagonal Frobenius norm drops below off_tol times the matrix norm.
/// Throws on non-convergence within max_sweeps.
SymmetricEigen jacobi_eigh(Eigen::MatrixXd A, double off_tol = 1e-12,
                           int max_sweeps = 100);

}  // namespace cfopt
