#pragma once

#include <chrono>
#include <functional>
#include <optional>

#include "cfopt/oracles.hpp"
#include "cfopt/quadratic_model.hpp"
#include "cfopt/run_record.hpp"

namespace cfopt {

/// Inputs of the curvature-free accelerated composite gradient solver for
/// min psi_s + psi_n with psi_s smooth and psi_n proper closed convex.
struct AcgParams {
  double mu = 0.5;              // strong-convexity parameter the checks certify against
  double L0 = 1.0;              // initial curvature estimate, must be >= mu
  double sigma = 0.25;          // relative residual factor in the stop test
  double theta = 4.0;           // descent factor in the stop test, > 2
  double beta = 2.0;            // line-search growth factor, > 1
  long long max_iters = 1'000'000;
  double check_tolerance = 1e-10;  // relative slack for all inequality checks

  void validate() const;
};

struct AcgState {
  Point x;            // x_j
  Point y;            // y_j
  double A = 0.0;     // A_j
  QuadraticModel Q;   // Q_j (combined model)
  double L = 0.0;     // L_j
  long long j = 0;
  Point y0;           // initial point, fixed
  double psi_y = 0.0;   // cached psi(y_j)
  double psi_y0 = 0.0;  // cached psi(y_0)

  static AcgState initial(const Point& y0, const AcgParams& params, double psi_at_y0);
};

/// One mu-ACG update computed at a trial curvature estimate L, together with
/// the auxiliary quantities the checks need.
struct AcgCandidate {
  double L = 0.0;
  double a = 0.0;        // a_j
  double A_next = 0.0;   // A_{j+1}
  double xi = 0.0;       // 1 + mu*A_j
  double xi_next = 0.0;  // 1 + mu*A_{j+1}
  Point x_tilde;
  Point y_next;
  Point x_next;
  Point u_tilde;
  QuadraticModel q_next;        // q_{j+1} as an explicit (a, b, mu) model
  double q_tilde_at_y_next = 0.0;
  double psi_s_at_x_tilde = 0.0;
  double psi_s_at_y_next = 0.0;
  double psi_n_at_y_next = 0.0;
  double ell_at_y_next = 0.0;   // linearization of psi_s at x_tilde, evaluated at y_next

  double psi_at_y_next() const { return psi_s_at_y_next + psi_n_at_y_next; }
};

enum class AcgStatus { Success, Failure, IterLimit };

struct AcgOutcome {
  Point y_out;
  Point u_out;
  double L_out = 0.0;
  AcgStatus status = AcgStatus::IterLimit;
  long long iters = 0;  // completed iterations
};

/// Positive root of L*a^2 - xi*a - xi*A = 0, i.e. the step satisfying
/// a^2 = xi*(a + A)/L.
double acg_step_size(double xi, double A, double L);

/// Cached gradient data at x_tilde, reusable across line-search trials that
/// produce the same x_tilde (A_j = 0 makes x_tilde independent of L).
struct AcgGradCache {
  Point x_tilde;
  double psi_s_value = 0.0;
  Point grad;
  bool valid = false;
};

AcgCandidate acg_candidate(const AcgState& state, double L, const SmoothOracle& psi_s,
                           const ProxOracle& psi_n, AcgGradCache* cache = nullptr);

/// Line-search acceptance conditions at the candidate's L.
bool acg_curvature_check(const AcgCandidate& cand, const AcgState& state, double tau);

struct AcgLineSearchResult {
  double L_next = 0.0;
  AcgCandidate candidate;
  int trials = 0;  // candidates built, including the accepted one
};

AcgLineSearchResult acg_line_search(const AcgState& state, const SmoothOracle& psi_s,
                                    const ProxOracle& psi_n, double beta, double tau,
                                    int max_trials = 60);

/// Local convexity conditions; a violation certifies that psi_s is not
/// mu-strongly convex along the trajectory and aborts the run with Failure.
bool acg_convexity_check(const AcgCandidate& cand, const AcgState& state,
                         const QuadraticModel& Q_next, double tau);

/// Relative termination test on (u_tilde, y_next) against y0.
bool acg_termination_check(const AcgCandidate& cand, const Point& y0, double psi_at_y0,
                           double theta, double sigma, double tau);

/// Per-iteration instrumentation record handed to an optional observer.
struct AcgIterRecord {
  long long j = 0;
  double L = 0.0;
  double a = 0.0;
  double A_prev = 0.0;
  double A_next = 0.0;
  double xi = 0.0;
  double xi_next = 0.0;
  Point x_prev;
  Point y_prev;
  Point x_tilde;
  Point x_next;
  Point y_next;
  Point u_tilde;
  QuadraticModel q_next;
  QuadraticModel Q_next;
  double psi_at_y_prev = 0.0;
  double psi_at_y_next = 0.0;
  int line_search_trials = 0;
  bool convexity_ok = false;
  bool termination_ok = false;
};

using AcgObserver = std::function<void(const AcgIterRecord&)>;

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

std::pair<AcgOutcome, RunRecord> acg_run(const SmoothOracle& psi_s, const ProxOracle& psi_n,
                                         const Point& y0, const AcgParams& params,
                                         const AcgObserver& observer = nullptr,
                                         const Deadline& deadline = std::nullopt);

}  // namespace cfopt
