#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "geepress/correlation.hpp"
#include "geepress/errors.hpp"

using namespace geepress;

TEST_CASE("correlation names round-trip and complexity orders structures") {
  for (CorrelationKind k :
       {CorrelationKind::Independence, CorrelationKind::Ar1,
        CorrelationKind::Exchangeable, CorrelationKind::Unstructured}) {
    CHECK(parse_correlation(correlation_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_correlation("toeplitz"), ParameterError);
  CHECK(correlation_complexity(CorrelationKind::Independence) <
        correlation_complexity(CorrelationKind::Ar1));
  CHECK(correlation_complexity(CorrelationKind::Ar1) <
        correlation_complexity(CorrelationKind::Exchangeable));
  CHECK(correlation_complexity(CorrelationKind::Exchangeable) <
        correlation_complexity(CorrelationKind::Unstructured));
}

TEST_CASE("parameter counts over a grid of n waves") {
  CHECK(correlation_param_count(CorrelationKind::Independence, 5) == 0);
  CHECK(correlation_param_count(CorrelationKind::Ar1, 5) == 1);
  CHECK(correlation_param_count(CorrelationKind::Exchangeable, 5) == 1);
  CHECK(correlation_param_count(CorrelationKind::Unstructured, 5) == 10);
}

TEST_CASE("ar1 matrix decays with actual time separation") {
  const double a = 0.6;
  const auto wc = WorkingCorrelation::ar1(a);
  const Eigen::MatrixXd R = build_correlation(wc, {1.0, 2.0, 3.0});
  CHECK(R(0, 0) == doctest::Approx(1.0));
  CHECK(R(0, 1) == doctest::Approx(a));
  CHECK(R(0, 2) == doctest::Approx(a * a));
  CHECK(R(1, 2) == doctest::Approx(a));
  CHECK(R == R.transpose());

  // non-unit spacing: exponent is the raw separation
  const Eigen::MatrixXd Rg = build_correlation(wc, {0.0, 0.5, 2.0});
  CHECK(Rg(0, 1) == doctest::Approx(std::pow(a, 0.5)));
  CHECK(Rg(0, 2) == doctest::Approx(std::pow(a, 2.0)));
  CHECK(Rg(1, 2) == doctest::Approx(std::pow(a, 1.5)));

  // negative alpha with fractional separation has no real power
  const auto neg = WorkingCorrelation::ar1(-0.4);
  CHECK_NOTHROW(build_correlation(neg, {1.0, 2.0, 4.0}));
  CHECK_THROWS_AS(build_correlation(neg, {0.0, 0.5}), ParameterError);
}

TEST_CASE("exchangeable and independence matrices") {
  const Eigen::MatrixXd E =
      build_correlation(WorkingCorrelation::exchangeable(0.3), {1., 2., 3., 4.});
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(E(i, j) == doctest::Approx(i == j ? 1.0 : 0.3));
    }
  }
  const Eigen::MatrixXd I =
      build_correlation(WorkingCorrelation::independence(), {1., 2., 3.});
  CHECK(I.isIdentity(0.0));
}

TEST_CASE("alpha outside the open unit interval is rejected") {
  CHECK_THROWS_AS(build_correlation(WorkingCorrelation::ar1(1.0), {1., 2.}),
                  ParameterError);
  CHECK_THROWS_AS(
      build_correlation(WorkingCorrelation::exchangeable(-1.2), {1., 2.}),
      ParameterError);
}

TEST_CASE("unstructured entries come from the wave grid") {
  Eigen::MatrixXd grid(3, 3);
  grid << 1.0, 0.5, 0.2, 0.5, 1.0, 0.4, 0.2, 0.4, 1.0;
  const auto wc = WorkingCorrelation::unstructured(grid, {1.0, 2.0, 3.0});
  // a cluster observed at waves 1 and 3 picks the (0, 2) grid entry
  const Eigen::MatrixXd R = build_correlation(wc, {1.0, 3.0});
  CHECK(R(0, 1) == doctest::Approx(0.2));
  CHECK_THROWS_AS(build_correlation(wc, {1.0, 2.5}), ParameterError);
}

TEST_CASE("wave_index finds exact grid members only") {
  const std::vector<double> grid = {0.0, 0.2, 1.5};
  CHECK(wave_index(grid, 0.2) == 1);
  CHECK(wave_index(grid, 1.5) == 2);
  CHECK_THROWS_AS(wave_index(grid, 0.3), ParameterError);
}

TEST_CASE("positive definiteness check and repair") {
  Eigen::MatrixXd good(2, 2);
  good << 1.0, 0.5, 0.5, 1.0;
  CHECK(is_positive_definite(good));

  // exchangeable with alpha below -1/(n-1) is indefinite for n = 3
  Eigen::MatrixXd bad(3, 3);
  bad << 1.0, -0.8, -0.8, -0.8, 1.0, -0.8, -0.8, -0.8, 1.0;
  CHECK_FALSE(is_positive_definite(bad));

  RepairLog log;
  const Eigen::MatrixXd fixed = repair_to_pd(bad, &log, "unit test");
  CHECK(is_positive_definite(fixed));
  CHECK(log.repairs == 1);
  REQUIRE(log.notes.size() == 1);
  CHECK(log.notes[0].find("unit test") != std::string::npos);
  for (int i = 0; i < 3; ++i) CHECK(fixed(i, i) == doctest::Approx(1.0));
  CHECK((fixed - fixed.transpose()).cwiseAbs().maxCoeff() == 0.0);

  // build_correlation repairs on the fly and logs it
  RepairLog build_log;
  const Eigen::MatrixXd built =
      build_correlation(WorkingCorrelation::exchangeable(-0.8),
                        {1.0, 2.0, 3.0}, &build_log);
  CHECK(is_positive_definite(built));
  CHECK(build_log.repairs == 1);

  // a PD input passes through untouched
  RepairLog quiet;
  const Eigen::MatrixXd untouched =
      build_correlation(WorkingCorrelation::exchangeable(0.4),
                        {1.0, 2.0, 3.0}, &quiet);
  CHECK(quiet.repairs == 0);
  CHECK(untouched(0, 1) == doctest::Approx(0.4));
}
