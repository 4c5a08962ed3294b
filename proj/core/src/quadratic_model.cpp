#include "cfopt/quadratic_model.hpp"

#include <stdexcept>

namespace cfopt {

QuadraticModel::QuadraticModel(double const_term, Point linear_term, double curvature)
    : const_term_(const_term), linear_term_(std::move(linear_term)), curvature_(curvature) {
  if (!(curvature_ >= 0)) {
    throw std::invalid_argument("QuadraticModel: curvature must be nonnegative");
  }
}

QuadraticModel QuadraticModel::zero(Index dim, double curvature) {
  return QuadraticModel(0.0, Point::Zero(dim), curvature);
}

double QuadraticModel::value(const Point& x) const {
  require_dim(x, linear_term_.size(), "QuadraticModel::value");
  return const_term_ + linear_term_.dot(x) + 0.5 * curvature_ * x.squaredNorm();
}

Point QuadraticModel::gradient(const Point& x) const {
  require_dim(x, linear_term_.size(), "QuadraticModel::gradient");
  return linear_term_ + curvature_ * x;
}

double quad_eval(const QuadraticModel& model, const Point& x) { return model.value(x); }

QuadraticModel quad_combine(const QuadraticModel& Q_prev, const QuadraticModel& q_new,
                            double A_prev, double a_new) {
  if (Q_prev.curvature() != q_new.curvature()) {
    throw std::invalid_argument("quad_combine: mismatched curvatures");
  }
  if (!(A_prev >= 0)) throw std::invalid_argument("quad_combine: A_prev < 0");
  if (!(a_new > 0)) throw std::invalid_argument("quad_combine: a_new must be positive");
  if (A_prev + a_new == 0) throw std::invalid_argument("quad_combine: zero total weight");
  if (A_prev == 0) return q_new;
  const double total = A_prev + a_new;
  const double wq = A_prev / total;
  const double wn = a_new / total;
  return QuadraticModel(wq * Q_prev.const_term() + wn * q_new.const_term(),
                        wq * Q_prev.linear_term() + wn * q_new.linear_term(),
                        Q_prev.curvature());
}

Point quad_argmin_regularized(const QuadraticModel& model, double weight,
                              const Point& anchor) {
  if (!(weight > 0)) throw std::invalid_argument("quad_argmin_regularized: weight <= 0");
  require_dim(anchor, model.dim(), "quad_argmin_regularized");
  return (anchor - weight * model.linear_term()) / (1.0 + weight * model.curvature());
}

}  // namespace cfopt
