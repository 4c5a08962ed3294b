#pragma once

#include <functional>
#include <optional>

#include "cfopt/ext_value.hpp"
#include "cfopt/point.hpp"

namespace cfopt {

/// First-order oracle for a continuously differentiable function.
struct SmoothOracle {
  std::function<double(const Point&)> eval;
  std::function<Point(const Point&)> grad;
  /// Lipschitz constant of the gradient, when known.
  std::optional<double> grad_lipschitz_hint;
};

/// Oracle for a proper closed convex function h: value (possibly +inf) and
/// proximal map prox(lambda, x) = argmin_u { lambda*h(u) + 0.5*||u - x||^2 }.
struct ProxOracle {
  std::function<ExtValue(const Point&)> eval;
  std::function<Point(double, const Point&)> prox;
};

/// Linear approximation of psi at center: psi(center) + <grad psi(center), x - center>.
inline double linearization(double value_at_center, const Point& grad_at_center,
                            const Point& x, const Point& center) {
  return value_at_center + grad_at_center.dot(x - center);
}

}  // namespace cfopt
