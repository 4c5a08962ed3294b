#pragma once

#include <vector>

#include "cfopt/acg.hpp"
#include "cfopt/checks.hpp"
#include "cfopt/problem.hpp"
#include "cfopt/rng.hpp"

namespace cfopt::testutil {

Point random_point(SeededRng& rng, Index n, double lo = -1.0, double hi = 1.0);

/// Projection onto the probability simplex by enumerating candidate active
/// sets and solving each equality-constrained face exactly. Exponential in
/// the dimension; independent of the production sort-and-threshold path.
Point brute_force_simplex_projection(const Point& w);

/// Wraps a smooth/prox oracle pair as a CompositeProblem (for the prox
/// fixed-point stationarity test on subproblems).
CompositeProblem as_problem(SmoothOracle f, ProxOracle h, Index dim);

/// Threshold on A_{j+1} beyond which the relative termination test is
/// guaranteed to hold.
double acg_A_threshold(double mu, double Lbar, double sigma, double theta);

/// Worst-case iteration count of the inner solver for a strongly convex
/// smooth part with Lipschitz constant bounded by Lbar.
long long acg_iteration_bound(double mu, double Lbar, double sigma, double theta);

struct ApdBoundInputs {
  double m0 = 0.0;
  double M0 = 0.0;
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double m_star = 0.0;
  double M_star = 0.0;
  double delta0 = 0.0;  // phi(z0) - phi_star
  double rho = 0.0;
};

/// Worst-case total inner iterations of the outer solver.
long long apd_total_inner_bound(const ApdBoundInputs& in);

struct AcgRunCapture {
  AcgOutcome outcome;
  RunRecord record;
  std::vector<AcgIterRecord> iters;
};

AcgRunCapture run_acg_instrumented(const SmoothOracle& psi_s, const ProxOracle& psi_n,
                                   const Point& y0, const AcgParams& params);

}  // namespace cfopt::testutil
