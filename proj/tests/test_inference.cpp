#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "geepress/errors.hpp"
#include "geepress/inference.hpp"
#include "support/oracles.hpp"

using namespace geepress;

TEST_CASE("zero_coefficients builds selector rows") {
  const LinearHypothesis h = LinearHypothesis::zero_coefficients({1, 2}, 4);
  REQUIRE(h.C.rows() == 2);
  REQUIRE(h.C.cols() == 4);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(2, 4);
  expected(0, 1) = 1.0;
  expected(1, 2) = 1.0;
  CHECK((h.C - expected).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(LinearHypothesis::zero_coefficients({4}, 4), ParameterError);
  CHECK_THROWS_AS(LinearHypothesis::zero_coefficients({}, 4), ParameterError);
}

TEST_CASE("single-coefficient wald equals the robust z statistic squared") {
  const Family f(FamilyKind::BinaryLogit);
  const auto data = oracle::random_panel(f, 80, 5, {0.4, 0.5, -0.3}, 7);
  const GeeFit fit = geepress::fit(data, f, CorrelationKind::Exchangeable);
  REQUIRE(fit.converged);

  const LinearHypothesis h = LinearHypothesis::zero_coefficients({1}, 3);
  const TestResult t = wald_test(fit, h);
  const double z = fit.beta[1] / std::sqrt(fit.sandwich_cov(1, 1));
  CHECK(t.statistic == doctest::Approx(z * z).epsilon(1e-10));
  CHECK(t.df == 1);
  CHECK(t.kind == TestKind::Wald);
  CHECK(t.p_value > 0.0);
  CHECK(t.p_value < 1.0);
}

TEST_CASE("wald handles general restrictions and nonzero targets") {
  const Family f(FamilyKind::GaussianIdentity);
  const auto data = oracle::random_panel(f, 100, 4, {0.5, 0.3, -0.2}, 11);
  const GeeFit fit = geepress::fit(data, f, CorrelationKind::Independence);
  REQUIRE(fit.converged);

  // contrast beta_2 - beta_3 = 0.5 computed two ways
  LinearHypothesis h;
  h.C.resize(1, 3);
  h.C << 0.0, 1.0, -1.0;
  h.r.resize(1);
  h.r << 0.5;
  const TestResult t = wald_test(fit, h);
  const Eigen::VectorXd dev = h.C * fit.beta - h.r;
  const Eigen::MatrixXd S = h.C * fit.sandwich_cov * h.C.transpose();
  CHECK(t.statistic == doctest::Approx(dev.dot(S.inverse() * dev))
                           .epsilon(1e-10));
  CHECK(t.df == 1);

  // the statistic is invariant to rescaling a restriction row
  LinearHypothesis scaled = h;
  scaled.C *= 3.0;
  scaled.r *= 3.0;
  CHECK(wald_test(fit, scaled).statistic ==
        doctest::Approx(t.statistic).epsilon(1e-10));
}

TEST_CASE("wald rejects rank-deficient restriction matrices") {
  const Family f(FamilyKind::GaussianIdentity);
  const auto data = oracle::random_panel(f, 40, 4, {0.5, 0.3, -0.2}, 13);
  const GeeFit fit = geepress::fit(data, f, CorrelationKind::Independence);
  REQUIRE(fit.converged);
  LinearHypothesis h;
  h.C.resize(2, 3);
  h.C << 0, 1, 0, 0, 2, 0;  // duplicate restriction
  CHECK_THROWS_AS(wald_test(fit, h), ParameterError);

  LinearHypothesis too_many;
  too_many.C = Eigen::MatrixXd::Identity(3, 3);
  LinearHypothesis extra = too_many;
  extra.C.conservativeResize(4, 3);
  extra.C.row(3) << 1, 1, 1;
  CHECK_THROWS_AS(wald_test(fit, extra), ParameterError);
}

TEST_CASE("score and wald tests agree asymptotically") {
  const Family f(FamilyKind::BinaryLogit);
  // large sample under the null beta_3 = 0
  const auto data = oracle::random_panel(f, 600, 5, {0.4, 0.5, 0.0}, 17);
  const GeeFit fit = geepress::fit(data, f, CorrelationKind::Exchangeable);
  REQUIRE(fit.converged);

  const LinearHypothesis h = LinearHypothesis::zero_coefficients({2}, 3);
  const TestResult wald = wald_test(fit, h);
  const TestResult score =
      score_test(data, f, CorrelationKind::Exchangeable, h);
  CHECK(score.kind == TestKind::Score);
  CHECK(score.df == 1);
  // both statistics estimate the same quantity; at this sample size they
  // should sit within a few percent of each other
  CHECK(score.statistic ==
        doctest::Approx(wald.statistic).epsilon(0.10));
}

TEST_CASE("coordinate and null-space score paths give the same statistic") {
  const Family f(FamilyKind::PoissonLog);
  const auto data = oracle::random_panel(f, 150, 4, {0.6, 0.3, 0.0}, 19);

  // pinning x3 = 0 via the fast coordinate path
  const LinearHypothesis coord = LinearHypothesis::zero_coefficients({2}, 3);
  const TestResult fast =
      score_test(data, f, CorrelationKind::Ar1, coord);

  // the same hypothesis phrased as a scaled general restriction forces
  // the null-space path
  LinearHypothesis general;
  general.C.resize(1, 3);
  general.C << 0.0, 0.0, 2.5;
  general.r = Eigen::VectorXd::Zero(1);
  const TestResult rotated =
      score_test(data, f, CorrelationKind::Ar1, general);

  CHECK(fast.df == rotated.df);
  CHECK(fast.statistic ==
        doctest::Approx(rotated.statistic).epsilon(1e-6));
}

TEST_CASE("score test rejects degenerate hypotheses") {
  const Family f(FamilyKind::GaussianIdentity);
  const auto data = oracle::random_panel(f, 40, 4, {0.5, 0.3, -0.2}, 23);
  LinearHypothesis all;
  all.C = Eigen::MatrixXd::Identity(3, 3);
  // restricting every coefficient leaves nothing to fit
  CHECK_THROWS_AS(score_test(data, f, CorrelationKind::Independence, all),
                  ParameterError);
}

TEST_CASE("p-values come from the chi-square upper tail") {
  const Family f(FamilyKind::GaussianIdentity);
  const auto data = oracle::random_panel(f, 200, 4, {0.5, 0.0, 0.0}, 29);
  const GeeFit fit = geepress::fit(data, f, CorrelationKind::Independence);
  REQUIRE(fit.converged);
  const LinearHypothesis h = LinearHypothesis::zero_coefficients({1, 2}, 3);
  const TestResult t = wald_test(fit, h);
  CHECK(t.df == 2);
  // chi-square(2) upper tail has the closed form exp(-x/2)
  CHECK(t.p_value == doctest::Approx(std::exp(-t.statistic / 2.0))
                         .epsilon(1e-8));
}

TEST_CASE("score test under the null is not significant on null data") {
  const Family f(FamilyKind::BinaryLogit);
  const auto data = oracle::random_panel(f, 300, 4, {0.4, 0.3, 0.0}, 31);
  const LinearHypothesis h = LinearHypothesis::zero_coefficients({2}, 3);
  const TestResult t = score_test(data, f, CorrelationKind::Exchangeable, h);
  // a single dataset under H0: the statistic should look like a chi2(1)
  // draw, i.e. not astronomically large
  CHECK(t.statistic < 15.0);
  CHECK(t.p_value > 1e-4);
}
