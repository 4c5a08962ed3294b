#pragma once

#include "cfopt/apd.hpp"
#include "cfopt/problem.hpp"

namespace cfopt {

/// Adaptive proximal gradient descent with backtracking. The step estimate L
/// grows by gamma_u until the composite descent test accepts, and shrinks by
/// gamma_d after each accepted step.
struct PgdParams {
  double L_init = 1.0;
  double gamma_u = 2.0;
  double gamma_d = 2.0;
  double rho = 1e-5;
  long long max_iters = 1'000'000'000;
  double time_limit_s = std::numeric_limits<double>::infinity();
  double check_tolerance = 1e-10;

  void validate() const;
};

struct PgdResult {
  Point z_bar;
  Point v_bar;
  RunRecord record;
};

/// Iterates z+ = prox(1/L, z - grad f(z)/L) and stops when the residual
/// v = L*(z - z+) + grad f(z+) - grad f(z), which lies in grad f(z+) + dh(z+),
/// has norm at most rho. If trace is non-null, one entry is appended per
/// accepted step using the outer-trace schema with m = L/2.
PgdResult pgd_run(const CompositeProblem& problem, const Point& z0, const PgdParams& params,
                  OuterTrace* trace = nullptr);

}  // namespace cfopt
