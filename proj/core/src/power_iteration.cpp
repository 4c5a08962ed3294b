#include "cfopt/power_iteration.hpp"

#include <cmath>

#include "cfopt/rng.hpp"

namespace cfopt {

double power_iteration_lmax(const LinearOp& op, Index dim, int max_iters, double tol,
                            std::uint64_t seed) {
  if (dim <= 0) throw std::invalid_argument("power_iteration_lmax: dim must be positive");
  if (!(tol > 0)) throw std::invalid_argument("power_iteration_lmax: tol must be positive");

  SeededRng rng(seed);
  Point v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = rng.uniform(-1.0, 1.0);
  v /= v.norm();

  double estimate = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    Point w = op(v);
    const double rayleigh = v.dot(w);
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;  // v in the kernel; PSD operator is zero on this ray
    const bool settled =
        it >= 2 && std::abs(rayleigh - estimate) <= tol * std::max(std::abs(rayleigh), 1e-30);
    estimate = rayleigh;
    if (settled) return estimate;
    v = w / wn;
  }
  throw PowerIterationError(estimate);
}

}  // namespace cfopt
