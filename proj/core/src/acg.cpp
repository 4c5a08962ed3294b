#include "cfopt/acg.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "cfopt/checks.hpp"
#include "cfopt/problem.hpp"

namespace cfopt {

void AcgParams::validate() const {
  if (!(mu > 0)) throw std::invalid_argument("AcgParams: mu must be positive");
  if (!(L0 >= mu)) throw std::invalid_argument("AcgParams: L0 must be >= mu");
  if (!(sigma > 0)) throw std::invalid_argument("AcgParams: sigma must be positive");
  if (!(theta > 2)) throw std::invalid_argument("AcgParams: theta must exceed 2");
  if (!(beta > 1)) throw std::invalid_argument("AcgParams: beta must exceed 1");
  if (!(check_tolerance >= 0)) throw std::invalid_argument("AcgParams: negative slack");
  if (max_iters <= 0) throw std::invalid_argument("AcgParams: max_iters must be positive");
}

AcgState AcgState::initial(const Point& y0, const AcgParams& params, double psi_at_y0) {
  AcgState s{.x = y0,
             .y = y0,
             .A = 0.0,
             .Q = QuadraticModel::zero(y0.size(), params.mu),
             .L = params.L0,
             .j = 0,
             .y0 = y0,
             .psi_y = psi_at_y0,
             .psi_y0 = psi_at_y0};
  return s;
}

double acg_step_size(double xi, double A, double L) {
  if (!(xi >= 1) || !(A >= 0) || !(L > 0)) {
    throw std::invalid_argument("acg_step_size: need xi >= 1, A >= 0, L > 0");
  }
  // All terms of the +root are positive, so no cancellation occurs.
  return (xi + std::sqrt(xi * xi + 4.0 * L * xi * A)) / (2.0 * L);
}

AcgCandidate acg_candidate(const AcgState& state, double L, const SmoothOracle& psi_s,
                           const ProxOracle& psi_n, AcgGradCache* cache) {
  const double mu = state.Q.curvature();
  AcgCandidate c;
  c.L = L;
  c.xi = 1.0 + mu * state.A;
  c.a = acg_step_size(c.xi, state.A, L);
  c.A_next = state.A + c.a;
  c.xi_next = 1.0 + mu * c.A_next;

  // A_j = 0 makes x_tilde = x_j independent of the trial L; keeping it exact
  // lets the gradient cache hit across line-search trials.
  c.x_tilde = state.A == 0.0
                  ? state.x
                  : Point((state.A * state.y + c.a * state.x) / c.A_next);

  if (cache != nullptr && cache->valid && cache->x_tilde == c.x_tilde) {
    c.psi_s_at_x_tilde = cache->psi_s_value;
  } else {
    c.psi_s_at_x_tilde = psi_s.eval(c.x_tilde);
    if (cache != nullptr) {
      cache->x_tilde = c.x_tilde;
      cache->psi_s_value = c.psi_s_at_x_tilde;
      cache->grad = psi_s.grad(c.x_tilde);
      cache->valid = true;
    }
  }
  const Point grad_x_tilde = cache != nullptr ? cache->grad : psi_s.grad(c.x_tilde);

  const double Lmu = L + mu;
  c.y_next = psi_n.prox(1.0 / Lmu, c.x_tilde - grad_x_tilde / Lmu);
  require_finite(c.y_next, "acg_candidate: prox output");

  const ExtValue hval = psi_n.eval(c.y_next);
  if (!hval.is_finite()) {
    throw std::domain_error("acg_candidate: prox output outside dom psi_n");
  }
  c.psi_n_at_y_next = hval.finite_value();
  c.psi_s_at_y_next = psi_s.eval(c.y_next);

  c.x_next = state.x + (c.a / c.xi_next) *
                           (L * (c.y_next - c.x_tilde) + mu * (c.y_next - state.x));

  const Point grad_y_next = psi_s.grad(c.y_next);
  c.u_tilde = grad_y_next - grad_x_tilde + Lmu * (c.x_tilde - c.y_next);

  c.ell_at_y_next =
      linearization(c.psi_s_at_x_tilde, grad_x_tilde, c.y_next, c.x_tilde);
  c.q_tilde_at_y_next = c.ell_at_y_next + c.psi_n_at_y_next +
                        0.5 * mu * (c.y_next - c.x_tilde).squaredNorm();

  // Expand q(x) = q_tilde(y_next) + L*<x_tilde - y_next, x - y_next>
  //             + (mu/2)*||x - y_next||^2 into (a, b, mu) form.
  const Point d = c.x_tilde - c.y_next;
  const double const_term = c.q_tilde_at_y_next - L * d.dot(c.y_next) +
                            0.5 * mu * c.y_next.squaredNorm();
  c.q_next = QuadraticModel(const_term, L * d - mu * c.y_next, mu);
  return c;
}

bool acg_curvature_check(const AcgCandidate& c, const AcgState& state, double tau) {
  const double mu = state.Q.curvature();
  const double dy2 = (c.y_next - c.x_tilde).squaredNorm();

  const bool descent_ok =
      leq_with_slack(c.psi_s_at_y_next - c.ell_at_y_next, 0.5 * c.L * dy2, tau);
  if (!descent_ok) return false;

  const double lhs = 0.5 * mu * c.A_next * dy2 +
                     0.5 * c.xi_next * (state.y - c.x_next).squaredNorm();
  const double rhs = c.A_next * (c.q_next.value(state.y) - c.psi_at_y_next()) +
                     0.5 * c.xi * (state.y - state.x).squaredNorm();
  return leq_with_slack(lhs, rhs, tau);
}

AcgLineSearchResult acg_line_search(const AcgState& state, const SmoothOracle& psi_s,
                                    const ProxOracle& psi_n, double beta, double tau,
                                    int max_trials) {
  AcgGradCache cache;
  double L = state.L;
  for (int s = 0; s < max_trials; ++s) {
    AcgCandidate cand = acg_candidate(state, L, psi_s, psi_n, &cache);
    if (acg_curvature_check(cand, state, tau)) {
      return AcgLineSearchResult{L, std::move(cand), s + 1};
    }
    L *= beta;
  }
  throw std::runtime_error(
      "acg_line_search: no admissible L after " + std::to_string(max_trials) +
      " trials; the smooth part appears to violate its Lipschitz assumption");
}

bool acg_convexity_check(const AcgCandidate& c, const AcgState& state,
                         const QuadraticModel& Q_next, double tau) {
  const double psi_y = state.psi_y;
  if (!leq_with_slack(c.q_next.value(state.y), psi_y, tau)) return false;
  if (!leq_with_slack(Q_next.value(state.y), psi_y, tau)) return false;
  if (!leq_with_slack(Q_next.value(c.y_next), c.psi_at_y_next(), tau)) return false;
  const double lin = c.psi_at_y_next() + c.u_tilde.dot(state.y0 - c.y_next);
  return geq_with_slack(state.psi_y0, lin, tau);
}

bool acg_termination_check(const AcgCandidate& c, const Point& y0, double psi_at_y0,
                           double theta, double sigma, double tau) {
  const double disp2 = (c.y_next - y0).squaredNorm();
  const double lhs1 = (c.u_tilde + y0 - c.y_next).squaredNorm();
  const double rhs1 = theta * (psi_at_y0 - c.psi_at_y_next() + 0.5 * disp2);
  if (!leq_with_slack(lhs1, rhs1, tau)) return false;
  return leq_with_slack(c.u_tilde.squaredNorm(), sigma * sigma * disp2, tau);
}

std::pair<AcgOutcome, RunRecord> acg_run(const SmoothOracle& psi_s_in,
                                         const ProxOracle& psi_n_in, const Point& y0,
                                         const AcgParams& params,
                                         const AcgObserver& observer,
                                         const Deadline& deadline) {
  params.validate();
  require_finite(y0, "acg_run: y0");

  const auto t0 = std::chrono::steady_clock::now();
  auto counts = std::make_shared<EvalCounts>();

  SmoothOracle psi_s;
  psi_s.eval = [counts, &psi_s_in](const Point& x) {
    ++counts->func_evals;
    return psi_s_in.eval(x);
  };
  psi_s.grad = [counts, &psi_s_in](const Point& x) {
    ++counts->grad_evals;
    return psi_s_in.grad(x);
  };
  psi_s.grad_lipschitz_hint = psi_s_in.grad_lipschitz_hint;
  ProxOracle psi_n;
  psi_n.eval = psi_n_in.eval;
  psi_n.prox = [counts, &psi_n_in](double lambda, const Point& x) {
    ++counts->prox_evals;
    return psi_n_in.prox(lambda, x);
  };

  const ExtValue h0 = psi_n.eval(y0);
  if (!h0.is_finite()) throw std::invalid_argument("acg_run: y0 outside dom psi_n");
  const double psi_at_y0 = psi_s.eval(y0) + h0.finite_value();

  AcgState state = AcgState::initial(y0, params, psi_at_y0);
  const double tau = params.check_tolerance;

  auto finish = [&](AcgOutcome out) {
    RunRecord rec;
    rec.func_evals = counts->func_evals;
    rec.grad_evals = counts->grad_evals;
    rec.prox_evals = counts->prox_evals;
    rec.inner_iters = out.iters;
    rec.final_residual = out.u_out.size() > 0 ? out.u_out.norm()
                                              : std::numeric_limits<double>::infinity();
    rec.status = out.status == AcgStatus::Success ? RunStatus::Solved
                 : out.status == AcgStatus::Failure ? RunStatus::Failed
                                                    : RunStatus::IterLimit;
    rec.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return std::make_pair(std::move(out), rec);
  };

  Point last_y = y0;
  Point last_u = Point::Zero(y0.size());
  while (true) {
    if (state.j >= params.max_iters ||
        (deadline && std::chrono::steady_clock::now() >= *deadline)) {
      return finish(AcgOutcome{last_y, last_u, state.L, AcgStatus::IterLimit, state.j});
    }

    AcgLineSearchResult ls =
        acg_line_search(state, psi_s, psi_n, params.beta, tau);
    const AcgCandidate& cand = ls.candidate;
    const QuadraticModel Q_next = quad_combine(state.Q, cand.q_next, state.A, cand.a);

    const bool convexity_ok = acg_convexity_check(cand, state, Q_next, tau);
    const bool termination_ok =
        convexity_ok && acg_termination_check(cand, y0, state.psi_y0, params.theta,
                                              params.sigma, tau);

    if (observer) {
      observer(AcgIterRecord{.j = state.j,
                             .L = ls.L_next,
                             .a = cand.a,
                             .A_prev = state.A,
                             .A_next = cand.A_next,
                             .xi = cand.xi,
                             .xi_next = cand.xi_next,
                             .x_prev = state.x,
                             .y_prev = state.y,
                             .x_tilde = cand.x_tilde,
                             .x_next = cand.x_next,
                             .y_next = cand.y_next,
                             .u_tilde = cand.u_tilde,
                             .q_next = cand.q_next,
                             .Q_next = Q_next,
                             .psi_at_y_prev = state.psi_y,
                             .psi_at_y_next = cand.psi_at_y_next(),
                             .line_search_trials = ls.trials,
                             .convexity_ok = convexity_ok,
                             .termination_ok = termination_ok});
    }

    if (!convexity_ok) {
      return finish(AcgOutcome{cand.y_next, cand.u_tilde, ls.L_next, AcgStatus::Failure,
                               state.j + 1});
    }
    if (termination_ok) {
      return finish(AcgOutcome{cand.y_next, cand.u_tilde, ls.L_next, AcgStatus::Success,
                               state.j + 1});
    }

    last_y = cand.y_next;
    last_u = cand.u_tilde;
    state.x = cand.x_next;
    state.y = cand.y_next;
    state.A = cand.A_next;
    state.Q = Q_next;
    state.L = ls.L_next;
    state.psi_y = cand.psi_at_y_next();
    ++state.j;
  }
}

}  // namespace cfopt
