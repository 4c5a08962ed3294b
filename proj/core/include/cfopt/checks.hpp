#pragma once

#include <algorithm>
#include <cmath>

namespace cfopt {

/// Inequality test "lhs <= rhs" with additive slack
///   lhs <= rhs + tau_abs + tau_rel * max(|lhs|, |rhs|, 1).
/// Exact floating-point comparison turns borderline equalities (which the
/// analysis produces in exact arithmetic) into spurious failures.
inline bool leq_with_slack(double lhs, double rhs, double tau_rel,
                           double tau_abs = 0.0) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  return lhs <= rhs + tau_abs + tau_rel * scale;
}

inline bool geq_with_slack(double lhs, double rhs, double tau_rel,
                           double tau_abs = 0.0) {
  return leq_with_slack(rhs, lhs, tau_rel, tau_abs);
}

/// max{log t, 1} for t > 0.
inline double log1_plus(double t) { return std::max(std::log(t), 1.0); }

}  // namespace cfopt
