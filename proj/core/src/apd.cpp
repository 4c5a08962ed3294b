#include "cfopt/apd.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "cfopt/checks.hpp"

namespace cfopt {

void ApdParams::validate() const {
  if (!(m0 > 0)) throw std::invalid_argument("ApdParams: m0 must be positive");
  if (!(M0 >= m0)) throw std::invalid_argument("ApdParams: M0 must be >= m0");
  if (!(rho > 0)) throw std::invalid_argument("ApdParams: rho must be positive");
  if (!(theta > 2)) throw std::invalid_argument("ApdParams: theta must exceed 2");
  if (!(alpha > 1)) throw std::invalid_argument("ApdParams: alpha must exceed 1");
  if (!(beta > 1)) throw std::invalid_argument("ApdParams: beta must exceed 1");
  if (max_outer <= 0 || max_total_inner <= 0 || max_inner_per_call <= 0) {
    throw std::invalid_argument("ApdParams: iteration limits must be positive");
  }
  if (!(time_limit_s > 0)) throw std::invalid_argument("ApdParams: time limit must be positive");
}

Subproblem apd_build_subproblem(const CompositeProblem& problem, double m,
                                const Point& z_anchor, double M,
                                const ApdParams& params) {
  if (!(m > 0)) throw std::invalid_argument("apd_build_subproblem: m must be positive");
  require_dim(z_anchor, problem.dim, "apd_build_subproblem: z_anchor");

  const double half_inv_m = 1.0 / (2.0 * m);
  Subproblem sub;
  sub.psi_s.eval = [f = problem.f.eval, half_inv_m, z_anchor](const Point& x) {
    return half_inv_m * f(x) + 0.5 * (x - z_anchor).squaredNorm();
  };
  sub.psi_s.grad = [g = problem.f.grad, half_inv_m, z_anchor](const Point& x) {
    return Point(half_inv_m * g(x) + (x - z_anchor));
  };
  if (problem.f.grad_lipschitz_hint) {
    sub.psi_s.grad_lipschitz_hint = *problem.f.grad_lipschitz_hint * half_inv_m + 1.0;
  }
  sub.psi_n.eval = [h = problem.h.eval, half_inv_m](const Point& x) {
    return h(x).scaled(half_inv_m);
  };
  sub.psi_n.prox = [p = problem.h.prox, half_inv_m](double lambda, const Point& x) {
    return p(lambda * half_inv_m, x);
  };

  sub.acg_params.mu = 0.5;
  sub.acg_params.L0 = M * half_inv_m + 1.0;
  sub.acg_params.sigma = 0.25;
  sub.acg_params.theta = params.theta;
  sub.acg_params.beta = params.beta;
  sub.acg_params.max_iters = params.max_inner_per_call;
  sub.acg_params.check_tolerance = params.check_tolerance;
  return sub;
}

MLineSearchResult apd_m_line_search(const CompositeProblem& problem, const ApdState& state,
                                    const ApdParams& params, long long inner_budget,
                                    const Deadline& deadline, const AcgObserver& observer) {
  constexpr int kMaxIncreases = 60;
  MLineSearchResult result;
  double m = state.m;
  for (int s = 0; s < kMaxIncreases; ++s, m *= params.alpha) {
    Subproblem sub = apd_build_subproblem(problem, m, state.z, state.M, params);
    if (params.decay_mode) {
      sub.acg_params.L0 =
          std::max(sub.acg_params.mu, sub.acg_params.L0 / (1.0 + params.beta / 2.0));
    }
    if (inner_budget >= 0) {
      if (inner_budget - result.inner_iters <= 0) {
        result.m_next = m;
        result.outcome.status = AcgStatus::IterLimit;
        result.outcome.y_out = state.z;
        result.outcome.u_out = Point::Zero(state.z.size());
        result.outcome.L_out = sub.acg_params.L0;
        return result;
      }
      sub.acg_params.max_iters =
          std::min(sub.acg_params.max_iters, inner_budget - result.inner_iters);
    }

    auto [outcome, rec] = acg_run(sub.psi_s, sub.psi_n, state.z, sub.acg_params,
                                  observer, deadline);
    result.inner_iters += outcome.iters;
    ++result.acg_calls;
    if (outcome.status != AcgStatus::Failure) {
      result.m_next = m;
      result.outcome = std::move(outcome);
      result.L0_used = sub.acg_params.L0;
      return result;  // Success, or a budget/deadline stop the caller handles
    }
  }
  throw std::runtime_error(
      "apd_m_line_search: no admissible m after 60 increases; "
      "the smooth part appears to violate its curvature assumptions");
}

ApdResult apd_run(const CompositeProblem& problem, const Point& z0, const ApdParams& params,
                  const AcgObserver& acg_observer) {
  params.validate();
  require_dim(z0, problem.dim, "apd_run: z0");
  require_finite(z0, "apd_run: z0");
  if (!problem.h.eval(z0).is_finite()) {
    throw std::invalid_argument("apd_run: z0 outside dom h");
  }

  const auto t_start = std::chrono::steady_clock::now();
  Deadline deadline;
  if (std::isfinite(params.time_limit_s)) {
    deadline = t_start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(params.time_limit_s));
  }

  auto counts = std::make_shared<EvalCounts>();
  const CompositeProblem cp = with_counters(problem, counts);

  ApdResult res;
  res.trace.solver = "apd";
  res.trace.z0 = z0;
  res.trace.rho = params.rho;
  res.trace.theta = params.theta;

  ApdState state{z0, params.m0, params.M0, 0,
                 cp.f.eval(z0) + cp.h.eval(z0).finite_value()};
  res.trace.phi0 = state.phi_z;

  res.z_bar = z0;
  res.record.final_residual = std::numeric_limits<double>::infinity();

  auto finish = [&](RunStatus status) {
    res.record.status = status;
    res.record.func_evals = counts->func_evals;
    res.record.grad_evals = counts->grad_evals;
    res.record.prox_evals = counts->prox_evals;
    res.record.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return std::move(res);
  };
  auto out_of_time = [&] {
    return deadline && std::chrono::steady_clock::now() >= *deadline;
  };

  while (true) {
    if (state.k >= params.max_outer) return finish(RunStatus::IterLimit);
    if (out_of_time()) return finish(RunStatus::TimeLimit);
    if (res.record.inner_iters >= params.max_total_inner) {
      return finish(RunStatus::IterLimit);
    }

    if (params.decay_mode && state.k > 0) {
      state.m = std::max(params.m0, state.m / (1.0 + params.alpha / 2.0));
    }

    MLineSearchResult ls =
        apd_m_line_search(cp, state, params,
                          params.max_total_inner - res.record.inner_iters, deadline,
                          acg_observer);
    res.record.inner_iters += ls.inner_iters;
    if (ls.outcome.status != AcgStatus::Success) {
      return finish(out_of_time() ? RunStatus::TimeLimit : RunStatus::IterLimit);
    }

    const double m_next = ls.m_next;
    const Point& z_next = ls.outcome.y_out;
    const Point v_next = 2.0 * m_next * (ls.outcome.u_out + state.z - z_next);
    const double phi_next = cp.f.eval(z_next) + cp.h.eval(z_next).finite_value();
    const double M_next = 2.0 * m_next * (ls.outcome.L_out - 1.0);

    res.trace.entries.push_back(OuterTraceEntry{state.k, m_next, M_next, z_next,
                                                Point(2.0 * m_next * ls.outcome.u_out),
                                                v_next, phi_next, ls.inner_iters});
    ++res.record.outer_iters;
    res.z_bar = z_next;
    res.v_bar = v_next;
    res.record.final_residual = v_next.norm();

    if (v_next.norm() <= params.rho) return finish(RunStatus::Solved);

    state.z = z_next;
    state.m = m_next;
    state.M = M_next;
    state.phi_z = phi_next;
    ++state.k;
  }
}

InvariantReport verify_descent_invariants(const OuterTrace& trace, double theta, double tau,
                                          std::optional<double> phi_star) {
  InvariantReport report;
  auto flag = [&](long long k, const char* cond, double lhs, double rhs) {
    report.violations.push_back(InvariantViolation{k, cond, lhs, rhs});
  };

  const Point* z_prev = &trace.z0;
  double phi_prev = trace.phi0;
  double lambda_sum = 0.0;
  double best_v2 = std::numeric_limits<double>::infinity();

  for (const OuterTraceEntry& e : trace.entries) {
    const Point step = *z_prev - e.z_next;
    const Point v_composed = e.u_next + 2.0 * e.m_next * step;
    if ((e.v_next - v_composed).norm() > tau * (1.0 + e.v_next.norm())) {
      flag(e.k, "composition", (e.v_next - v_composed).norm(), tau * (1.0 + e.v_next.norm()));
    }
    const double v2 = v_composed.squaredNorm();
    const double descent_rhs = 2.0 * theta * e.m_next * (phi_prev - e.phi_next);
    if (!leq_with_slack(v2, descent_rhs, tau)) flag(e.k, "descent-sq", v2, descent_rhs);

    const double u2 = e.u_next.squaredNorm();
    const double res_rhs = e.m_next * e.m_next * step.squaredNorm();
    if (!leq_with_slack(u2, res_rhs, tau)) flag(e.k, "residual-sq", u2, res_rhs);

    if (!leq_with_slack(e.phi_next, phi_prev, tau)) {
      flag(e.k, "monotone", e.phi_next, phi_prev);
    }

    if (phi_star) {
      lambda_sum += 1.0 / e.m_next;
      best_v2 = std::min(best_v2, e.v_next.squaredNorm());
      const double rate_rhs = 2.0 * theta * (trace.phi0 - *phi_star) / lambda_sum;
      if (!leq_with_slack(best_v2, rate_rhs, tau)) flag(e.k, "rate", best_v2, rate_rhs);
    }

    z_prev = &e.z_next;
    phi_prev = e.phi_next;
  }
  return report;
}

}  // namespace cfopt
