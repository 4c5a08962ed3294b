#include "test_util.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cfopt::testutil {

Point random_point(SeededRng& rng, Index n, double lo, double hi) {
  Point x(n);
  for (Index i = 0; i < n; ++i) x(i) = rng.uniform(lo, hi);
  return x;
}

Point brute_force_simplex_projection(const Point& w) {
  const auto d = static_cast<std::size_t>(w.size());
  if (d == 0 || d > 20) throw std::invalid_argument("brute force oracle: bad dimension");

  Point best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t mask = 1; mask < (1u << d); ++mask) {
    double sum = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask & (1u << i)) {
        sum += w(static_cast<Index>(i));
        ++count;
      }
    }
    const double tau = (sum - 1.0) / count;
    Point v = Point::Zero(w.size());
    bool feasible = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask & (1u << i)) {
        v(static_cast<Index>(i)) = w(static_cast<Index>(i)) - tau;
        if (v(static_cast<Index>(i)) < -1e-12) feasible = false;
      }
    }
    if (!feasible) continue;
    const double dist = (v - w).squaredNorm();
    if (dist < best_dist) {
      best_dist = dist;
      best = v;
    }
  }
  return best;
}

CompositeProblem as_problem(SmoothOracle f, ProxOracle h, Index dim) {
  CompositeProblem p;
  p.f = std::move(f);
  p.h = std::move(h);
  p.dim = dim;
  return p;
}

double acg_A_threshold(double mu, double Lbar, double sigma, double theta) {
  const double inner = std::min(1.0 / (sigma * sigma), 4.0 * theta / (theta - 2.0));
  return (4.0 * Lbar / mu) * (1.0 / mu + 36.0 * Lbar * inner);
}

long long acg_iteration_bound(double mu, double Lbar, double sigma, double theta) {
  const double A = acg_A_threshold(mu, Lbar, sigma, theta);
  return static_cast<long long>(
      std::ceil(1.0 + 2.0 * std::sqrt(2.0 * Lbar / mu) * log1_plus(Lbar * A)));
}

long long apd_total_inner_bound(const ApdBoundInputs& in) {
  const double m_bar = std::max(in.m0, (in.alpha + in.beta) * in.m_star);
  const double M_bar = std::max(in.M0, (in.alpha + in.beta) * in.M_star);
  const double P0 = 5.0 * in.beta * (M_bar + m_bar) / in.m0;
  const double C0 =
      std::sqrt(in.m0 * P0) * log1_plus(P0 * acg_A_threshold(0.5, P0, 0.25, in.theta));
  const double rho2 = in.rho * in.rho;
  const double bound =
      8.0 * C0 *
      std::sqrt((1.0 + 2.0 * in.theta * m_bar * in.delta0 / rho2) *
                (1.0 / in.m0 + 2.0 * in.theta * in.delta0 / rho2));
  return static_cast<long long>(std::ceil(bound));
}

AcgRunCapture run_acg_instrumented(const SmoothOracle& psi_s, const ProxOracle& psi_n,
                                   const Point& y0, const AcgParams& params) {
  AcgRunCapture cap;
  auto [outcome, record] = acg_run(psi_s, psi_n, y0, params,
                                   [&cap](const AcgIterRecord& r) { cap.iters.push_back(r); });
  cap.outcome = std::move(outcome);
  cap.record = record;
  return cap;
}

}  // namespace cfopt::testutil
