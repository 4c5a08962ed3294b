#pragma once

#include "cfopt/problem.hpp"

namespace cfopt {

/// Tests the inclusion v_bar in grad f(z_bar) + dh(z_bar) via the prox fixed
/// point: with w = v_bar - grad f(z_bar), w lies in dh(z_bar) exactly when
/// prox(lambda, z_bar + lambda*w) = z_bar. Returns true iff
///   ||prox(lambda, z_bar + lambda*w) - z_bar|| <= tol * (1 + ||z_bar||).
bool check_stationarity(const CompositeProblem& problem, const Point& z_bar,
                        const Point& v_bar, double lambda, double tol);

/// Central-difference gradient, component i given by
/// [eval(x + step*e_i) - eval(x - step*e_i)] / (2*step).
Point finite_diff_grad(const SmoothOracle& oracle, const Point& x, double step);

}  // namespace cfopt
