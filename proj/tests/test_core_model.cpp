#include <gtest/gtest.h>

#include "cfopt/ext_value.hpp"
#include "cfopt/problems.hpp"
#include "cfopt/stationarity.hpp"
#include "test_util.hpp"

using namespace cfopt;

namespace {

SmoothOracle half_sq_norm() {
  SmoothOracle f;
  f.eval = [](const Point& x) { return 0.5 * x.squaredNorm(); };
  f.grad = [](const Point& x) { return x; };
  f.grad_lipschitz_hint = 1.0;
  return f;
}

TEST(ExtValue, InfinityPropagatesThroughSumsAndScaling) {
  const ExtValue inf = ExtValue::infinity();
  EXPECT_FALSE(inf.is_finite());
  EXPECT_FALSE((inf + 3.0).is_finite());
  EXPECT_FALSE(inf.scaled(0.5).is_finite());
  EXPECT_TRUE(inf.scaled(0.0).is_finite());  // scaling the indicator by 0 kills it
  EXPECT_THROW(inf.finite_value(), std::domain_error);
  EXPECT_TRUE(ExtValue(3.0) <= inf);
  EXPECT_FALSE(inf <= ExtValue(3.0));
}

TEST(CheckStationarity, TrueAtExactStationaryPointWithZeroH) {
  CompositeProblem p = testutil::as_problem(half_sq_norm(), make_zero_prox(), 2);
  SeededRng rng(3);
  const Point z = testutil::random_point(rng, 2);
  EXPECT_TRUE(check_stationarity(p, z, p.f.grad(z), 1.0, 1e-8));
}

TEST(CheckStationarity, FalseWhenResidualShifted) {
  CompositeProblem p = testutil::as_problem(half_sq_norm(), make_zero_prox(), 2);
  Point z(2);
  z << 0.3, -0.7;
  Point v = p.f.grad(z);
  v(0) += 1.0;  // with h == 0 the prox is the identity, so the residual is ||w||
  EXPECT_FALSE(check_stationarity(p, z, v, 1.0, 0.5 / (1.0 + z.norm())));
}

TEST(CheckStationarity, NormalConeMembershipAtBoundary) {
  // h = indicator of {x >= 0}; at z = 0 any w <= 0 lies in the normal cone.
  ProxOracle h;
  h.eval = [](const Point& x) -> ExtValue {
    return (x.array() >= -1e-12).all() ? ExtValue(0.0) : ExtValue::infinity();
  };
  h.prox = [](double, const Point& x) { return x.cwiseMax(0.0).eval(); };
  CompositeProblem p = testutil::as_problem(half_sq_norm(), h, 1);

  const Point z = Point::Zero(1);
  Point v = p.f.grad(z);
  v(0) += -1.0;
  EXPECT_TRUE(check_stationarity(p, z, v, 1.0, 1e-8));
  v(0) = p.f.grad(z)(0) + 1.0;  // positive w points out of the normal cone
  EXPECT_FALSE(check_stationarity(p, z, v, 1.0, 1e-3));
}

TEST(CheckStationarity, InvariantToLambdaOnExactInputs) {
  CompositeProblem p =
      testutil::as_problem(half_sq_norm(), make_box_indicator(-1.0, 1.0), 4);
  SeededRng rng(5);
  for (int t = 0; t < 10; ++t) {
    const Point z = p.h.prox(1.0, testutil::random_point(rng, 4, -2, 2));
    // v = grad f(z) + w with w a valid subgradient of the box indicator at z.
    Point w = Point::Zero(4);
    for (Index i = 0; i < 4; ++i) {
      if (z(i) >= 1.0 - 1e-12) w(i) = rng.uniform(0, 2);
      if (z(i) <= -1.0 + 1e-12) w(i) = -rng.uniform(0, 2);
    }
    const Point v = p.f.grad(z) + w;
    for (double lambda : {0.1, 1.0, 10.0}) {
      EXPECT_TRUE(check_stationarity(p, z, v, lambda, 1e-8)) << "lambda=" << lambda;
    }
  }
}

TEST(CheckStationarity, RejectsBadArguments) {
  CompositeProblem p = testutil::as_problem(half_sq_norm(), make_zero_prox(), 2);
  const Point z = Point::Zero(2);
  EXPECT_THROW(check_stationarity(p, z, z, 0.0, 1e-8), std::invalid_argument);
  EXPECT_THROW(check_stationarity(p, z, z, 1.0, 0.0), std::invalid_argument);
}

TEST(FiniteDiffGrad, QuadraticGradientRecovered) {
  SmoothOracle f = half_sq_norm();
  Point x(2);
  x << 1.0, 2.0;
  const Point g = finite_diff_grad(f, x, 1e-6);
  EXPECT_NEAR(g(0), 1.0, 1e-9);
  EXPECT_NEAR(g(1), 2.0, 1e-9);
}

TEST(FiniteDiffGrad, AffineIsExactForAnyStep) {
  SmoothOracle f;
  Point coef(3);
  coef << 2.0, -3.0, 0.5;
  f.eval = [coef](const Point& x) { return coef.dot(x) + 4.0; };
  f.grad = [coef](const Point&) { return coef; };
  for (double step : {1e-8, 1e-3, 1.0}) {
    const Point g = finite_diff_grad(f, Point::Zero(3), step);
    EXPECT_LE((g - coef).norm(), 1e-7);
  }
}

TEST(EvalCounting, WrapperCountsAndRawHandleDoesNot) {
  CompositeProblem p = testutil::as_problem(half_sq_norm(), make_zero_prox(), 2);
  auto counts = std::make_shared<EvalCounts>();
  CompositeProblem counted = with_counters(p, counts);

  const Point x = Point::Ones(2);
  counted.f.eval(x);
  counted.f.grad(x);
  counted.f.grad(x);
  counted.h.prox(1.0, x);
  EXPECT_EQ(counts->func_evals, 1);
  EXPECT_EQ(counts->grad_evals, 2);
  EXPECT_EQ(counts->prox_evals, 1);

  p.f.eval(x);
  p.h.prox(1.0, x);
  EXPECT_EQ(counts->func_evals, 1);
  EXPECT_EQ(counts->prox_evals, 1);
}

TEST(ProblemMeta, OrderingValidated) {
  ProblemMeta meta;
  meta.m_star = 2.0;
  meta.M_star = 1.0;
  EXPECT_THROW(meta.validate(), std::invalid_argument);
  meta.M_star = 3.0;
  EXPECT_NO_THROW(meta.validate());
}

}  // namespace
