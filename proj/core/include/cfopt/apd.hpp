#pragma once

#include <string>
#include <vector>

#include "cfopt/acg.hpp"
#include "cfopt/problem.hpp"

namespace cfopt {

/// Inputs of the curvature-free accelerated proximal descent solver.
struct ApdParams {
  double m0 = 1.0;    // initial lower-curvature estimate, > 0
  double M0 = 1.0;    // initial upper-curvature estimate, >= m0
  double rho = 1e-5;  // target residual norm
  double theta = 4.0;
  double alpha = 2.0;  // m line-search growth factor
  double beta = 2.0;   // inner L line-search growth factor
  bool decay_mode = false;
  long long max_outer = 1'000'000;
  long long max_total_inner = 1'000'000'000;
  long long max_inner_per_call = 10'000'000;
  double time_limit_s = std::numeric_limits<double>::infinity();
  double check_tolerance = 1e-10;

  void validate() const;
};

struct ApdState {
  Point z;        // z_k
  double m = 0.0;  // m_k
  double M = 0.0;  // M_k
  long long k = 0;
  double phi_z = 0.0;  // cached phi(z_k)
};

/// One accepted outer iteration. u_next = 2*m_next*u_tilde and
/// v_next = u_next + 2*m_next*(z_k - z_next).
struct OuterTraceEntry {
  long long k = 0;
  double m_next = 0.0;
  double M_next = 0.0;
  Point z_next;
  Point u_next;
  Point v_next;
  double phi_next = 0.0;
  long long inner_iters = 0;
};

struct OuterTrace {
  std::string solver;  // "apd" or "pgd"
  Point z0;
  double phi0 = 0.0;
  double rho = 0.0;
  double theta = 0.0;
  std::vector<OuterTraceEntry> entries;
};

struct Subproblem {
  SmoothOracle psi_s;
  ProxOracle psi_n;
  AcgParams acg_params;
};

/// Prox-subproblem of the outer iteration anchored at z_anchor:
///   psi_s = f/(2m) + 0.5*||. - z_anchor||^2,  psi_n = h/(2m),
/// solved with (mu, L0, sigma) = (1/2, M/(2m) + 1, 1/4).
Subproblem apd_build_subproblem(const CompositeProblem& problem, double m,
                                const Point& z_anchor, double M,
                                const ApdParams& params);

struct MLineSearchResult {
  double m_next = 0.0;
  AcgOutcome outcome;
  long long inner_iters = 0;  // accepted inner iterations over all calls, failed included
  int acg_calls = 0;
  double L0_used = 0.0;  // L0 handed to the successful call
};

/// Smallest m in {state.m * alpha^s} whose subproblem solve succeeds.
MLineSearchResult apd_m_line_search(const CompositeProblem& problem, const ApdState& state,
                                    const ApdParams& params,
                                    long long inner_budget = -1,
                                    const Deadline& deadline = std::nullopt,
                                    const AcgObserver& observer = nullptr);

struct ApdResult {
  Point z_bar;
  Point v_bar;  // empty if no outer iteration completed
  RunRecord record;
  OuterTrace trace;
};

ApdResult apd_run(const CompositeProblem& problem, const Point& z0,
                  const ApdParams& params, const AcgObserver& acg_observer = nullptr);

/// Per-entry invariant report of the proximal descent conditions.
struct InvariantViolation {
  long long k = 0;
  std::string condition;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct InvariantReport {
  std::vector<InvariantViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks, per trace entry and with relative slack tau:
///   (composition)  v = u + 2m*(z_prev - z)
///   (descent-sq)   ||v||^2 <= 2*theta*m*[phi(z_prev) - phi(z)]
///   (residual-sq)  ||u||^2 <= m^2*||z - z_prev||^2
///   (monotone)     phi(z) <= phi(z_prev)
///   (rate)         min_{j<=k} ||v_{j+1}||^2 <= 2*theta*Delta0 / sum_{j<=k} 1/m_{j+1},
/// the last only when phi_star is supplied.
InvariantReport verify_descent_invariants(const OuterTrace& trace, double theta, double tau,
                                          std::optional<double> phi_star = std::nullopt);

}  // namespace cfopt
