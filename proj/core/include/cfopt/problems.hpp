#pragma once

#include <cstdint>
#include <string>

#include "cfopt/power_iteration.hpp"
#include "cfopt/problem.hpp"

namespace cfopt {

/// h == 0: prox is the identity.
ProxOracle make_zero_prox();

/// Indicator of the box [lo, hi]^n; prox is the lambda-free clamp.
ProxOracle make_box_indicator(double lo, double hi);

/// Indicator of the probability simplex; prox is the lambda-free projection.
ProxOracle make_simplex_indicator();

enum class HKind { Zero, Box };

inline const char* to_string(HKind h) { return h == HKind::Zero ? "zero" : "box"; }

/// Synthetic quadratic composite instance with exact ground truth:
/// f(x) = 0.5*x'Hx + c'x with H symmetric and a deterministically placed
/// spectrum, h in {zero, box [-1,1]^n}. For nonconvex instances the spectrum
/// spans [-m, M] with both extremes attained; convex instances (m = 0) use
/// [M/100, M] so that the minimizer and optimal value exist and
/// phi_star = -0.5*c'H^{-1}c is exact for h == 0.
struct QuadraticInstance {
  Index n = 0;
  double m = 0.0;
  double M = 0.0;
  bool convex = false;
  HKind h_kind = HKind::Zero;
  std::uint64_t seed = 0;
  Eigen::MatrixXd H;
  Eigen::VectorXd c;
  ProblemMeta meta;
};

QuadraticInstance gen_quadratic_instance(Index n, double m, double M, bool convex,
                                         std::uint64_t seed, HKind h_kind = HKind::Zero);

CompositeProblem make_quadratic_problem(const QuadraticInstance& inst);

CompositeProblem gen_quadratic(Index n, double m, double M, bool convex,
                               std::uint64_t seed, HKind h_kind = HKind::Zero);

/// Quadratic with spectrum spanning [lo, hi] (0 < lo allowed); used by tests
/// that need strongly convex smooth parts with a known Lipschitz constant.
CompositeProblem gen_quadratic_spectrum(Index n, double lo, double hi,
                                        std::uint64_t seed, HKind h_kind = HKind::Zero);

/// Random instance of the nonconvex quadratic semidefinite program
///   min -eta1/2*||D*B(Z)||^2 + eta2/2*||A(Z) - b||^2
///   s.t. tr(Z) = 1, Z PSD,
/// over n x n symmetric matrices (ambient dimension n^2), with l-dimensional
/// operators [A(Z)]_j = A_j . Z and [B(Z)]_j = B_j . Z. The scales eta1, eta2
/// are calibrated by power iteration so the two Hessian parts have operator
/// norms m and M.
struct QsdpInstance {
  Index n = 0;
  Index l = 0;
  double m_target = 0.0;
  double M_target = 0.0;
  std::uint64_t seed = 0;
  Eigen::MatrixXd A_flat;  // l x n^2, row j = row-major vec(A_j)
  Eigen::MatrixXd B_flat;
  Eigen::VectorXd b;
  Eigen::VectorXd D;  // diagonal of D, positive integers
  double eta1 = 0.0;
  double eta2 = 0.0;
};

/// Sampling order per seed: A_1..A_l entries row-major, then B_1..B_l, then
/// b, then the l diagonal entries of D from {1, ..., 1000}.
QsdpInstance gen_qsdp_instance(Index n, Index l, double m, double M, std::uint64_t seed);

CompositeProblem make_qsdp_problem(const QsdpInstance& inst);

CompositeProblem gen_qsdp(Index n, Index l, double m, double M, std::uint64_t seed);

/// vec(I/n), the canonical starting point for the QSDP family.
Point qsdp_initial_point(Index n);

struct LinearOpPair {
  LinearOp negative_part;  // B'D^2B, before the eta1 scale
  LinearOp positive_part;  // A'A, before the eta2 scale
};

/// The two Hessian parts of the QSDP objective as operators on the ambient
/// space (without the eta scales).
LinearOpPair qsdp_hessian_parts(const QsdpInstance& inst);

/// Generator configuration; enough to rebuild a problem bit-identically.
struct ProblemSpec {
  std::string family;  // "quadratic" or "qsdp"
  Index n = 0;
  Index l = 0;         // qsdp only
  double m = 0.0;
  double M = 0.0;
  bool convex = false;       // quadratic only
  HKind h_kind = HKind::Zero;  // quadratic only
  std::uint64_t seed = 0;

  void validate() const;
};

CompositeProblem make_problem(const ProblemSpec& spec);
Point default_initial_point(const ProblemSpec& spec);

}  // namespace cfopt
