#include "cfopt/stationarity.hpp"

#include <cmath>
#include <stdexcept>

namespace cfopt {

bool check_stationarity(const CompositeProblem& problem, const Point& z_bar,
                        const Point& v_bar, double lambda, double tol) {
  if (!(lambda > 0)) throw std::invalid_argument("check_stationarity: lambda <= 0");
  if (!(tol > 0)) throw std::invalid_argument("check_stationarity: tol <= 0");
  require_dim(z_bar, problem.dim, "check_stationarity: z_bar");
  require_dim(v_bar, problem.dim, "check_stationarity: v_bar");
  require_finite(z_bar, "check_stationarity: z_bar");
  require_finite(v_bar, "check_stationarity: v_bar");

  const Point w = v_bar - problem.f.grad(z_bar);
  const Point fixed = problem.h.prox(lambda, z_bar + lambda * w);
  return (fixed - z_bar).norm() <= tol * (1.0 + z_bar.norm());
}

Point finite_diff_grad(const SmoothOracle& oracle, const Point& x, double step) {
  if (!(step > 0)) throw std::invalid_argument("finite_diff_grad: step <= 0");
  require_finite(x, "finite_diff_grad: x");
  Point g(x.size());
  Point probe = x;
  for (Index i = 0; i < x.size(); ++i) {
    probe(i) = x(i) + step;
    const double fp = oracle.eval(probe);
    probe(i) = x(i) - step;
    const double fm = oracle.eval(probe);
    probe(i) = x(i);
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      throw std::domain_error("finite_diff_grad: eval undefined at probe point");
    }
    g(i) = (fp - fm) / (2.0 * step);
  }
  return g;
}

}  // namespace cfopt
