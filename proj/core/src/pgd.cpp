#include "cfopt/pgd.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "cfopt/checks.hpp"

namespace cfopt {

namespace {
constexpr double kLMin = 1e-12;
constexpr int kMaxBacktracks = 120;
}  // namespace

void PgdParams::validate() const {
  if (!(L_init > 0)) throw std::invalid_argument("PgdParams: L_init must be positive");
  if (!(gamma_u > 1)) throw std::invalid_argument("PgdParams: gamma_u must exceed 1");
  if (!(gamma_d > 1)) throw std::invalid_argument("PgdParams: gamma_d must exceed 1");
  if (!(rho > 0)) throw std::invalid_argument("PgdParams: rho must be positive");
  if (max_iters <= 0) throw std::invalid_argument("PgdParams: max_iters must be positive");
  if (!(time_limit_s > 0)) throw std::invalid_argument("PgdParams: time limit must be positive");
}

PgdResult pgd_run(const CompositeProblem& problem, const Point& z0, const PgdParams& params,
                  OuterTrace* trace) {
  params.validate();
  require_dim(z0, problem.dim, "pgd_run: z0");
  require_finite(z0, "pgd_run: z0");
  if (!problem.h.eval(z0).is_finite()) {
    throw std::invalid_argument("pgd_run: z0 outside dom h");
  }

  const auto t_start = std::chrono::steady_clock::now();
  auto counts = std::make_shared<EvalCounts>();
  const CompositeProblem cp = with_counters(problem, counts);
  const double tau = params.check_tolerance;

  if (trace != nullptr) {
    trace->solver = "pgd";
    trace->z0 = z0;
    trace->rho = params.rho;
    trace->theta = 0.0;
    trace->entries.clear();
  }

  PgdResult res;
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

  Point z = z0;
  double f_z = cp.f.eval(z);
  Point g_z = cp.f.grad(z);
  if (trace != nullptr) trace->phi0 = f_z + cp.h.eval(z).finite_value();

  double L = params.L_init;
  for (long long k = 0; k < params.max_iters; ++k) {
    if (std::isfinite(params.time_limit_s) &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count() >=
            params.time_limit_s) {
      return finish(RunStatus::TimeLimit);
    }

    Point z_next;
    double f_next = 0.0;
    int trials = 0;
    for (;; ++trials) {
      if (trials >= kMaxBacktracks) {
        throw std::runtime_error("pgd_run: backtracking failed to find a descent step");
      }
      z_next = cp.h.prox(1.0 / L, z - g_z / L);
      f_next = cp.f.eval(z_next);
      const double model =
          linearization(f_z, g_z, z_next, z) + 0.5 * L * (z_next - z).squaredNorm();
      if (leq_with_slack(f_next, model, tau)) break;
      L *= params.gamma_u;
    }
    res.record.inner_iters += trials + 1;

    const Point g_next = cp.f.grad(z_next);
    const Point v = L * (z - z_next) + g_next - g_z;
    ++res.record.outer_iters;
    res.z_bar = z_next;
    res.v_bar = v;
    res.record.final_residual = v.norm();

    if (trace != nullptr) {
      // Same schema as the outer solver: with m = L/2 the identity
      // v = u + 2m*(z - z_next) holds with u = grad f(z_next) - grad f(z).
      trace->entries.push_back(OuterTraceEntry{k, L / 2.0, L, z_next, Point(g_next - g_z),
                                               v, f_next + cp.h.eval(z_next).finite_value(),
                                               trials + 1});
    }

    if (v.norm() <= params.rho) return finish(RunStatus::Solved);

    z = std::move(z_next);
    f_z = f_next;
    g_z = g_next;
    L = std::max(L / params.gamma_d, kLMin);
  }
  return finish(RunStatus::IterLimit);
}

}  // namespace cfopt
