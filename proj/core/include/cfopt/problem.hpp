#pragma once

#include <memory>
#include <optional>
#include <stdexcept>

#include "cfopt/oracles.hpp"
#include "cfopt/point.hpp"

namespace cfopt {

/// Ground-truth quantities of a generated instance, when known. m_star and
/// M_star are the smallest scalars bounding the curvature of f from below and
/// above; phi_star is the optimal value of f + h.
struct ProblemMeta {
  std::optional<double> m_star;
  std::optional<double> M_star;
  std::optional<double> phi_star;
  std::optional<double> d0;

  void validate() const {
    if (m_star && (*m_star < 0)) throw std::invalid_argument("meta: m_star < 0");
    if (m_star && M_star && *m_star > *M_star) {
      throw std::invalid_argument("meta: m_star > M_star");
    }
  }
};

/// Composite problem min f(z) + h(z) with f smooth (possibly nonconvex) and
/// h proper closed convex with a prox oracle.
struct CompositeProblem {
  SmoothOracle f;
  ProxOracle h;
  Index dim = 0;
  ProblemMeta meta;

  double phi(const Point& z) const {
    return f.eval(z) + h.eval(z).finite_value();
  }
};

/// Per-run oracle call counters. One instance per solve; runs never share one.
struct EvalCounts {
  long long func_evals = 0;
  long long grad_evals = 0;
  long long prox_evals = 0;
};

/// View of a problem whose oracles increment the given counters on every
/// call. Verification paths use the original problem so they do not perturb
/// the counts.
inline CompositeProblem with_counters(const CompositeProblem& p,
                                      std::shared_ptr<EvalCounts> counts) {
  CompositeProblem c = p;
  c.f.eval = [eval = p.f.eval, counts](const Point& x) {
    ++counts->func_evals;
    return eval(x);
  };
  c.f.grad = [grad = p.f.grad, counts](const Point& x) {
    ++counts->grad_evals;
    return grad(x);
  };
  c.h.prox = [prox = p.h.prox, counts](double lambda, const Point& x) {
    ++counts->prox_evals;
    return prox(lambda, x);
  };
  return c;
}

}  // namespace cfopt
