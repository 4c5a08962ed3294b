#pragma once

#include "cfopt/point.hpp"

namespace cfopt {

/// Quadratic a + <b, x> + (mu/2)*||x||^2 with isotropic Hessian mu*I, stored
/// in Theta(n) space. Houses the estimate-sequence models built by the
/// accelerated solvers.
class QuadraticModel {
 public:
  QuadraticModel() : const_term_(0.0), curvature_(0.0) {}  // empty 0-dim model
  QuadraticModel(double const_term, Point linear_term, double curvature);

  /// Zero model (a = 0, b = 0) with the given curvature.
  static QuadraticModel zero(Index dim, double curvature);

  double const_term() const { return const_term_; }
  const Point& linear_term() const { return linear_term_; }
  double curvature() const { return curvature_; }
  Index dim() const { return linear_term_.size(); }

  double value(const Point& x) const;
  Point gradient(const Point& x) const;

 private:
  double const_term_;
  Point linear_term_;
  double curvature_;
};

double quad_eval(const QuadraticModel& model, const Point& x);

/// Convex combination (A_prev*Q_prev + a_new*q_new) / (A_prev + a_new) applied
/// coefficient-wise; both models must share the same curvature, which is
/// preserved. A_prev = 0 returns q_new exactly.
QuadraticModel quad_combine(const QuadraticModel& Q_prev, const QuadraticModel& q_new,
                            double A_prev, double a_new);

/// Unique minimizer of weight*model(.) + 0.5*||. - anchor||^2, i.e.
/// (anchor - weight*b) / (1 + weight*mu).
Point quad_argmin_regularized(const QuadraticModel& model, double weight,
                              const Point& anchor);

}  // namespace cfopt
