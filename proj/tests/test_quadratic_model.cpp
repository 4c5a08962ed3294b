#include "cfopt/quadratic_model.hpp"

#include <gtest/gtest.h>

#include "cfopt/rng.hpp"
#include "test_util.hpp"

using namespace cfopt;

namespace {

Point pt(std::initializer_list<double> vals) {
  Point p(static_cast<Index>(vals.size()));
  Index i = 0;
  for (double v : vals) p(i++) = v;
  return p;
}

TEST(QuadEval, ZeroModelIsZero) {
  const QuadraticModel zero = QuadraticModel::zero(3, 0.0);
  EXPECT_EQ(quad_eval(zero, pt({1.0, -2.0, 7.5})), 0.0);
}

TEST(QuadEval, HandEvaluatedExample) {
  const QuadraticModel m(1.0, pt({2.0}), 2.0);
  EXPECT_DOUBLE_EQ(quad_eval(m, pt({3.0})), 16.0);  // 1 + 6 + 9
}

TEST(QuadEval, PureCurvatureOnUnitVector) {
  const QuadraticModel m(0.0, Point::Zero(4), 2.0);
  Point x = Point::Zero(4);
  x(2) = 1.0;
  EXPECT_DOUBLE_EQ(quad_eval(m, x), 1.0);
}

TEST(QuadEval, DimensionMismatchThrows) {
  const QuadraticModel m(0.0, Point::Zero(4), 1.0);
  EXPECT_THROW(quad_eval(m, Point::Zero(3)), std::invalid_argument);
}

TEST(QuadCombine, ZeroPrevWeightReturnsNewModelExactly) {
  const QuadraticModel garbage(123.0, pt({-7.0, 9.0}), 1.0);
  const QuadraticModel q(2.0, pt({4.0, -1.0}), 1.0);
  const QuadraticModel out = quad_combine(garbage, q, 0.0, 0.5);
  EXPECT_EQ(out.const_term(), q.const_term());
  EXPECT_EQ(out.linear_term(), q.linear_term());
}

TEST(QuadCombine, EqualWeightsGiveMidpoint) {
  const QuadraticModel Q(0.0, Point::Zero(1), 0.0);
  const QuadraticModel q(2.0, pt({4.0}), 0.0);
  const QuadraticModel out = quad_combine(Q, q, 1.0, 1.0);
  EXPECT_DOUBLE_EQ(out.const_term(), 1.0);
  EXPECT_DOUBLE_EQ(out.linear_term()(0), 2.0);
}

TEST(QuadCombine, MismatchedCurvatureThrows) {
  const QuadraticModel Q(0.0, Point::Zero(1), 1.0);
  const QuadraticModel q(0.0, Point::Zero(1), 2.0);
  EXPECT_THROW(quad_combine(Q, q, 1.0, 1.0), std::invalid_argument);
}

TEST(QuadCombine, NonpositiveNewWeightThrows) {
  const QuadraticModel Q(0.0, Point::Zero(1), 1.0);
  EXPECT_THROW(quad_combine(Q, Q, 1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(quad_combine(Q, Q, -1.0, 1.0), std::invalid_argument);
}

// Folding five models sequentially must agree with the direct weighted
// average at random evaluation points.
TEST(QuadCombine, CascadeMatchesDirectWeightedSum) {
  SeededRng rng(7);
  const Index n = 6;
  const double mu = 1.5;

  std::vector<QuadraticModel> models;
  std::vector<double> weights;
  for (int i = 0; i < 5; ++i) {
    models.emplace_back(rng.uniform(-2, 2), testutil::random_point(rng, n, -3, 3), mu);
    weights.push_back(rng.uniform(0.1, 2.0));
  }

  QuadraticModel folded = models[0];
  double total = weights[0];
  for (int i = 1; i < 5; ++i) {
    folded = quad_combine(folded, models[i], total, weights[i]);
    total += weights[i];
  }

  for (int t = 0; t < 10; ++t) {
    const Point x = testutil::random_point(rng, n, -5, 5);
    double direct = 0.0;
    for (int i = 0; i < 5; ++i) direct += weights[i] * models[i].value(x);
    direct /= total;
    const double got = folded.value(x);
    EXPECT_NEAR(got, direct, 1e-12 * std::max(1.0, std::abs(direct)));
  }
}

TEST(QuadArgmin, IdentityWhenUnregularized) {
  const QuadraticModel m(5.0, Point::Zero(3), 0.0);
  const Point anchor = pt({1.0, 2.0, 3.0});
  EXPECT_EQ(quad_argmin_regularized(m, 1.0, anchor), anchor);
}

TEST(QuadArgmin, ClosedFormScalarCase) {
  const QuadraticModel m(0.0, pt({1.0}), 1.0);
  const Point out = quad_argmin_regularized(m, 1.0, pt({0.0}));
  EXPECT_DOUBLE_EQ(out(0), -0.5);
}

TEST(QuadArgmin, NonpositiveWeightThrows) {
  const QuadraticModel m(0.0, Point::Zero(2), 1.0);
  EXPECT_THROW(quad_argmin_regularized(m, 0.0, Point::Zero(2)), std::invalid_argument);
}

// First-order optimality: weight*(b + mu*x) + (x - anchor) vanishes at the
// output.
TEST(QuadArgmin, FirstOrderOptimalityResidual) {
  SeededRng rng(11);
  for (int t = 0; t < 20; ++t) {
    const Index n = 5;
    const QuadraticModel m(rng.uniform(-1, 1), testutil::random_point(rng, n, -4, 4),
                           rng.uniform(0, 3));
    const double w = rng.uniform(0.01, 10.0);
    const Point anchor = testutil::random_point(rng, n, -4, 4);
    const Point x = quad_argmin_regularized(m, w, anchor);
    const Point residual = w * (m.linear_term() + m.curvature() * x) + (x - anchor);
    EXPECT_LE(residual.norm(), 1e-12 * (1.0 + anchor.norm()));
  }
}

}  // namespace
