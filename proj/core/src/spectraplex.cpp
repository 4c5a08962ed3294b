#include "cfopt/spectraplex.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>

#include "cfopt/jacobi.hpp"
#include "cfopt/simplex.hpp"

namespace cfopt {

namespace {

Eigen::MatrixXd to_matrix(const Point& z, Index n) {
  require_dim(z, n * n, "spectraplex: point");
  return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                        Eigen::RowMajor>>(z.data(), n, n);
}

Point to_point(const Eigen::MatrixXd& Z) {
  Point z(Z.size());
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      z.data(), Z.rows(), Z.cols()) = Z;
  return z;
}

}  // namespace

Point project_spectraplex(const Point& z, Index n) {
  require_finite(z, "project_spectraplex");
  const Eigen::MatrixXd Z = to_matrix(z, n);
  const Eigen::MatrixXd S = 0.5 * (Z + Z.transpose());

  const SymmetricEigen eig = jacobi_eigh(S);
  const Point lambda = project_simplex(eig.eigenvalues);

  Eigen::MatrixXd P =
      eig.eigenvectors * lambda.asDiagonal() * eig.eigenvectors.transpose();
  P = 0.5 * (P + P.transpose());
  return to_point(P);
}

ProxOracle make_spectraplex_indicator(Index n) {
  ProxOracle h;
  h.prox = [n](double /*lambda*/, const Point& x) { return project_spectraplex(x, n); };
  h.eval = [n](const Point& x) -> ExtValue {
    const Eigen::MatrixXd Z = to_matrix(x, n);
    const double scale = 1.0 + Z.norm();
    const double tol = 1e-8 * scale;
    if ((Z - Z.transpose()).norm() > tol) return ExtValue::infinity();
    if (std::abs(Z.trace() - 1.0) > tol) return ExtValue::infinity();
    Eigen::MatrixXd shifted = 0.5 * (Z + Z.transpose());
    shifted.diagonal().array() += tol;
    if (Eigen::LLT<Eigen::MatrixXd>(shifted).info() != Eigen::Success) {
      return ExtValue::infinity();
    }
    return 0.0;
  };
  return h;
}

}  // namespace cfopt
