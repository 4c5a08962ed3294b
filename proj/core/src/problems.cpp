#include "cfopt/problems.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "cfopt/rng.hpp"
#include "cfopt/simplex.hpp"
#include "cfopt/spectraplex.hpp"

namespace cfopt {

ProxOracle make_zero_prox() {
  ProxOracle h;
  h.eval = [](const Point&) -> ExtValue { return 0.0; };
  h.prox = [](double, const Point& x) { return x; };
  return h;
}

ProxOracle make_box_indicator(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("make_box_indicator: need lo < hi");
  ProxOracle h;
  h.eval = [lo, hi](const Point& x) -> ExtValue {
    const double tol = 1e-12 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
    if ((x.array() < lo - tol).any() || (x.array() > hi + tol).any()) {
      return ExtValue::infinity();
    }
    return 0.0;
  };
  h.prox = [lo, hi](double, const Point& x) {
    return x.cwiseMax(lo).cwiseMin(hi).eval();
  };
  return h;
}

ProxOracle make_simplex_indicator() {
  ProxOracle h;
  h.eval = [](const Point& x) -> ExtValue {
    const double tol = 1e-8;
    if ((x.array() < -tol).any() || std::abs(x.sum() - 1.0) > tol) {
      return ExtValue::infinity();
    }
    return 0.0;
  };
  h.prox = [](double, const Point& x) { return project_simplex(x); };
  return h;
}

namespace {

ProxOracle make_h(HKind kind) {
  return kind == HKind::Zero ? make_zero_prox() : make_box_indicator(-1.0, 1.0);
}

/// Dense symmetric H = Q diag(spectrum) Q' with Q from the QR factor of a
/// seeded Gaussian matrix, plus a seeded Gaussian linear term c.
/// Sampling order: the n*n Gaussian entries row-major, then the n entries of c.
struct QuadraticData {
  Eigen::MatrixXd H;
  Eigen::VectorXd c;
};

QuadraticData make_quadratic_data(Index n, const Eigen::VectorXd& spectrum,
                                  std::uint64_t seed) {
  SeededRng rng(seed);
  Eigen::MatrixXd G(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) G(i, j) = rng.normal();
  }
  Eigen::VectorXd c(n);
  for (Index i = 0; i < n; ++i) c(i) = rng.normal();

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  Eigen::MatrixXd Q = qr.householderQ();
  const Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    if (R(j, j) < 0) Q.col(j) = -Q.col(j);
  }

  QuadraticData data;
  data.H = Q * spectrum.asDiagonal() * Q.transpose();
  data.H = 0.5 * (data.H + data.H.transpose()).eval();
  data.c = std::move(c);
  return data;
}

}  // namespace

CompositeProblem make_quadratic_problem(const QuadraticInstance& inst) {
  auto data = std::make_shared<QuadraticInstance>(inst);
  CompositeProblem p;
  p.dim = inst.n;
  p.f.eval = [data](const Point& x) {
    return 0.5 * x.dot(data->H * x) + data->c.dot(x);
  };
  p.f.grad = [data](const Point& x) { return Point(data->H * x + data->c); };
  p.f.grad_lipschitz_hint = std::max(inst.m, inst.M);
  p.h = make_h(inst.h_kind);
  p.meta = inst.meta;
  return p;
}

CompositeProblem gen_quadratic_spectrum(Index n, double lo, double hi, std::uint64_t seed,
                                        HKind h_kind) {
  if (n < 1) throw std::invalid_argument("gen_quadratic_spectrum: n must be positive");
  if (!(lo <= hi)) throw std::invalid_argument("gen_quadratic_spectrum: need lo <= hi");
  Eigen::VectorXd spectrum =
      n == 1 ? Eigen::VectorXd::Constant(1, hi).eval()
             : Eigen::VectorXd::LinSpaced(n, lo, hi).eval();
  QuadraticInstance inst;
  inst.n = n;
  inst.m = std::max(0.0, -lo);
  inst.M = std::max(std::abs(lo), std::abs(hi));
  inst.convex = lo >= 0;
  inst.h_kind = h_kind;
  inst.seed = seed;
  auto data = make_quadratic_data(n, spectrum, seed);
  inst.H = std::move(data.H);
  inst.c = std::move(data.c);
  inst.meta.m_star = std::max(0.0, -lo);
  inst.meta.M_star = hi;
  return make_quadratic_problem(inst);
}

QuadraticInstance gen_quadratic_instance(Index n, double m, double M, bool convex,
                                         std::uint64_t seed, HKind h_kind) {
  if (!(m >= 0)) throw std::invalid_argument("gen_quadratic: m must be nonnegative");
  if (!(M > 0)) throw std::invalid_argument("gen_quadratic: M must be positive");
  if (!(m <= M)) throw std::invalid_argument("gen_quadratic: need m <= M");
  if (convex && m != 0) throw std::invalid_argument("gen_quadratic: convex requires m = 0");
  if (n < 2) throw std::invalid_argument("gen_quadratic: n must be at least 2");

  const double lo = convex ? 0.01 * M : -m;
  Eigen::VectorXd spectrum = Eigen::VectorXd::LinSpaced(n, lo, M);

  QuadraticInstance inst;
  inst.n = n;
  inst.m = m;
  inst.M = M;
  inst.convex = convex;
  inst.h_kind = h_kind;
  inst.seed = seed;
  auto data = make_quadratic_data(n, spectrum, seed);
  inst.H = std::move(data.H);
  inst.c = std::move(data.c);
  inst.meta.m_star = convex ? 0.0 : m;
  inst.meta.M_star = M;
  if (convex && h_kind == HKind::Zero) {
    // phi_star = -0.5*c'H^{-1}c at the minimizer -H^{-1}c.
    const Eigen::VectorXd sol = Eigen::LDLT<Eigen::MatrixXd>(inst.H).solve(inst.c);
    inst.meta.phi_star = -0.5 * inst.c.dot(sol);
  }
  return inst;
}

CompositeProblem gen_quadratic(Index n, double m, double M, bool convex,
                               std::uint64_t seed, HKind h_kind) {
  return make_quadratic_problem(gen_quadratic_instance(n, m, M, convex, seed, h_kind));
}

QsdpInstance gen_qsdp_instance(Index n, Index l, double m, double M, std::uint64_t seed) {
  if (n < 1 || l < 1) throw std::invalid_argument("gen_qsdp_instance: n, l must be positive");
  if (!(m > 0) || !(m <= M)) {
    throw std::invalid_argument("gen_qsdp_instance: need 0 < m <= M");
  }

  QsdpInstance inst;
  inst.n = n;
  inst.l = l;
  inst.m_target = m;
  inst.M_target = M;
  inst.seed = seed;

  const Index dim = n * n;
  SeededRng rng(seed);
  inst.A_flat.resize(l, dim);
  for (Index j = 0; j < l; ++j) {
    for (Index t = 0; t < dim; ++t) inst.A_flat(j, t) = rng.uniform01();
  }
  inst.B_flat.resize(l, dim);
  for (Index j = 0; j < l; ++j) {
    for (Index t = 0; t < dim; ++t) inst.B_flat(j, t) = rng.uniform01();
  }
  inst.b.resize(l);
  for (Index j = 0; j < l; ++j) inst.b(j) = rng.uniform01();
  inst.D.resize(l);
  for (Index j = 0; j < l; ++j) inst.D(j) = static_cast<double>(rng.uniform_int(1, 1000));

  const LinearOpPair parts = qsdp_hessian_parts(inst);
  const double lmax_neg = power_iteration_lmax(parts.negative_part, dim, 10'000, 1e-8,
                                               seed ^ 0x5DEECE66Dull);
  const double lmax_pos = power_iteration_lmax(parts.positive_part, dim, 10'000, 1e-8,
                                               seed ^ 0x2545F4914F6CDD1Dull);
  if (lmax_neg <= 1e-12 || lmax_pos <= 1e-12) {
    throw std::runtime_error("gen_qsdp_instance: degenerate operator");
  }
  inst.eta1 = m / lmax_neg;
  inst.eta2 = M / lmax_pos;
  return inst;
}

LinearOpPair qsdp_hessian_parts(const QsdpInstance& inst) {
  auto data = std::make_shared<QsdpInstance>(inst);
  LinearOpPair pair;
  pair.negative_part = [data](const Point& z) {
    Eigen::VectorXd w = data->B_flat * z;
    w.array() *= data->D.array().square();
    return Point(data->B_flat.transpose() * w);
  };
  pair.positive_part = [data](const Point& z) {
    return Point(data->A_flat.transpose() * (data->A_flat * z));
  };
  return pair;
}

CompositeProblem make_qsdp_problem(const QsdpInstance& inst) {
  auto data = std::make_shared<QsdpInstance>(inst);
  CompositeProblem p;
  p.dim = inst.n * inst.n;
  p.f.eval = [data](const Point& z) {
    const Eigen::VectorXd wb = (data->B_flat * z).cwiseProduct(data->D);
    const Eigen::VectorXd wa = data->A_flat * z - data->b;
    return -0.5 * data->eta1 * wb.squaredNorm() + 0.5 * data->eta2 * wa.squaredNorm();
  };
  p.f.grad = [data](const Point& z) {
    Eigen::VectorXd wb = data->B_flat * z;
    wb.array() *= data->D.array().square();
    const Eigen::VectorXd wa = data->A_flat * z - data->b;
    return Point(-data->eta1 * (data->B_flat.transpose() * wb) +
                 data->eta2 * (data->A_flat.transpose() * wa));
  };
  p.f.grad_lipschitz_hint = data->m_target + data->M_target;
  p.h = make_spectraplex_indicator(inst.n);
  p.meta.m_star = data->m_target;
  // Conservative: the upper curvature of the sum is at most the sum of the
  // part norms.
  p.meta.M_star = data->M_target + data->m_target;
  return p;
}

CompositeProblem gen_qsdp(Index n, Index l, double m, double M, std::uint64_t seed) {
  return make_qsdp_problem(gen_qsdp_instance(n, l, m, M, seed));
}

Point qsdp_initial_point(Index n) {
  Eigen::MatrixXd Z = Eigen::MatrixXd::Identity(n, n) / static_cast<double>(n);
  return Eigen::Map<Point>(Z.data(), n * n);  // identity: row-major == col-major
}

void ProblemSpec::validate() const {
  if (family != "quadratic" && family != "qsdp") {
    throw std::invalid_argument("ProblemSpec: unknown family '" + family + "'");
  }
  if (n < 1) throw std::invalid_argument("ProblemSpec: n must be positive");
  if (family == "qsdp" && l < 1) throw std::invalid_argument("ProblemSpec: l must be positive");
}

CompositeProblem make_problem(const ProblemSpec& spec) {
  spec.validate();
  if (spec.family == "qsdp") return gen_qsdp(spec.n, spec.l, spec.m, spec.M, spec.seed);
  return gen_quadratic(spec.n, spec.m, spec.M, spec.convex, spec.seed, spec.h_kind);
}

Point default_initial_point(const ProblemSpec& spec) {
  if (spec.family == "qsdp") return qsdp_initial_point(spec.n);
  return Point::Zero(spec.n);
}

}  // namespace cfopt
