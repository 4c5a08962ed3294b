#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "cfopt/point.hpp"

namespace cfopt {

using LinearOp = std::function<Point(const Point&)>;

struct PowerIterationError : std::runtime_error {
  explicit PowerIterationError(double estimate)
      : std::runtime_error("power_iteration_lmax: no convergence within iteration cap"),
        last_estimate(estimate) {}
  double last_estimate;
};

/// Largest eigenvalue of a symmetric PSD operator by power iteration with a
/// deterministic seeded start vector. Converges when the Rayleigh quotient
/// stabilizes to relative tolerance tol; throws PowerIterationError (carrying
/// the last estimate) otherwise.
double power_iteration_lmax(const LinearOp& op, Index dim, int max_iters = 10'000,
                            double tol = 1e-6, std::uint64_t seed = 20240517ull);

}  // namespace cfopt
