#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "geepress/errors.hpp"
#include "geepress/gee.hpp"
#include "support/oracles.hpp"

using namespace geepress;

namespace {

/// Stacks a dataset into one dense design/response pair.
void stack(const LongitudinalDataset& data, Eigen::MatrixXd& X,
           Eigen::VectorXd& y) {
  X.resize(data.total_obs(), data.p);
  y.resize(data.total_obs());
  int row = 0;
  for (const auto& c : data.clusters) {
    X.middleRows(row, c.size()) = c.X;
    y.segment(row, c.size()) = c.y;
    row += c.size();
  }
}

}  // namespace

TEST_CASE("independence fit on gaussian data is ordinary least squares") {
  const Family f(FamilyKind::GaussianIdentity);
  const auto data = oracle::random_panel(f, 30, 4, {0.5, 0.3, -0.2}, 101);
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
  stack(data, X, y);
  const Eigen::VectorXd ols = oracle::ols_fit(X, y);

  const GeeFit fit = geepress::fit(data, f, CorrelationKind::Independence);
  REQUIRE(fit.converged);
  CHECK((fit.beta - ols).cwiseAbs().maxCoeff() < 1e-10);

  // dispersion = residual sum of squares over (n - p)
  const double rss = (y - X * ols).squaredNorm();
  CHECK(fit.phi == doctest::Approx(rss / (data.total_obs() - data.p))
                       .epsilon(1e-10));

  // model covariance = phi (X'X)^-1
  const Eigen::MatrixXd expected =
      fit.phi * (X.transpose() * X).inverse();
  CHECK((fit.model_cov - expected).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("independence fits match textbook IRLS for binary and poisson") {
  for (FamilyKind k : {FamilyKind::BinaryLogit, FamilyKind::PoissonLog}) {
    const Family f(k);
    const auto data = oracle::random_panel(f, 60, 5, {0.6, 0.4, -0.3}, 202);
    Eigen::MatrixXd X;
    Eigen::VectorXd y;
    stack(data, X, y);
    const Eigen::VectorXd glm = oracle::irls_fit(f, X, y);

    const GeeFit fit = geepress::fit(data, f, CorrelationKind::Independence);
    REQUIRE(fit.converged);
    CHECK((fit.beta - glm).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("estimating equations vanish at every converged solution") {
  const Family f(FamilyKind::BinaryLogit);
  const auto data = oracle::random_panel(f, 80, 5, {0.4, 0.4, 0.35}, 303);
  for (CorrelationKind k :
       {CorrelationKind::Independence, CorrelationKind::Ar1,
        CorrelationKind::Exchangeable, CorrelationKind::Unstructured}) {
    const GeeFit fit = geepress::fit(data, f, k);
    REQUIRE(fit.converged);
    // score sum_i D_i' V_i^-1 e_i recomputed from the caches
    Eigen::VectorXd score = Eigen::VectorXd::Zero(data.p);
    for (const auto& c : fit.cluster) {
      score += c.D.transpose() * c.V.llt().solve(c.resid);
    }
    CHECK(score.norm() < 1e-6 * (1.0 + fit.beta.norm()));
    CHECK(fit.ee_norm == doctest::Approx(score.norm()).epsilon(1e-6));
  }
}

TEST_CASE("dispersion and correlation estimates are moment fixed points") {
  const Family f(FamilyKind::PoissonLog);
  const auto data = oracle::random_panel(f, 70, 5, {0.7, 0.2, 0.4}, 404);
  FitOptions options;
  for (CorrelationKind k :
       {CorrelationKind::Ar1, CorrelationKind::Exchangeable,
        CorrelationKind::Unstructured}) {
    const GeeFit fit = geepress::fit(data, f, k, options);
    REQUIRE(fit.converged);

    // rebuild the Pearson residuals at the final estimates
    std::vector<Eigen::VectorXd> pearson;
    std::vector<std::vector<double>> waves;
    for (int i = 0; i < fit.n_clusters(); ++i) {
      pearson.push_back(
          fit.cluster[i].resid.cwiseQuotient(fit.cluster[i].var.cwiseSqrt()));
      waves.push_back(data.clusters[i].waves);
    }
    CHECK(estimate_phi(pearson, data.total_obs(), data.p, options.phi_mode) ==
          doctest::Approx(fit.phi).epsilon(1e-8));

    const WorkingCorrelation re = estimate_alpha(
        k, pearson, waves, data.wave_grid, fit.phi, data.p, options);
    if (k == CorrelationKind::Unstructured) {
      CHECK((re.matrix - fit.correlation.matrix).cwiseAbs().maxCoeff() <
            1e-8);
    } else {
      CHECK(re.alpha == doctest::Approx(fit.correlation.alpha).epsilon(1e-8));
    }
  }
}

TEST_CASE("exchangeable moment estimate matches the hand formula") {
  const Family f(FamilyKind::GaussianIdentity);
  const auto data = oracle::random_panel(f, 40, 4, {0.3, 0.5, -0.4}, 505);
  FitOptions options;
  const GeeFit fit =
      geepress::fit(data, f, CorrelationKind::Exchangeable, options);
  REQUIRE(fit.converged);

  // alpha = sum of distinct within-cluster cross products over
  // phi * (sum_i n_i(n_i-1)/2 - p)
  double cross = 0.0;
  double pairs = 0.0;
  for (const auto& c : fit.cluster) {
    const Eigen::VectorXd r = c.resid.cwiseQuotient(c.var.cwiseSqrt());
    for (int s = 0; s < r.size(); ++s) {
      for (int t = s + 1; t < r.size(); ++t) cross += r[s] * r[t];
    }
    pairs += 0.5 * r.size() * (r.size() - 1);
  }
  const double alpha = cross / (fit.phi * (pairs - data.p));
  CHECK(fit.correlation.alpha == doctest::Approx(alpha).epsilon(1e-8));
}

TEST_CASE("ar1 moment estimate with unit spacing matches the lag formula") {
  const Family f(FamilyKind::GaussianIdentity);
  const auto data = oracle::random_panel(f, 40, 5, {0.3, 0.5, -0.4}, 606);
  FitOptions options;
  const GeeFit fit = geepress::fit(data, f, CorrelationKind::Ar1, options);
  REQUIRE(fit.converged);

  double cross = 0.0;
  double pairs = 0.0;
  for (const auto& c : fit.cluster) {
    const Eigen::VectorXd r = c.resid.cwiseQuotient(c.var.cwiseSqrt());
    for (int t = 0; t + 1 < r.size(); ++t) cross += r[t] * r[t + 1];
    pairs += r.size() - 1;
  }
  const double alpha = cross / (fit.phi * (pairs - data.p));
  CHECK(fit.correlation.alpha == doctest::Approx(alpha).epsilon(1e-8));
}

TEST_CASE("unstructured moment matrix matches brute-force pair averages") {
  const Family f(FamilyKind::BinaryLogit);
  const auto data = oracle::random_panel(f, 90, 4, {0.3, 0.3, 0.3}, 707);
  FitOptions options;
  const GeeFit fit =
      geepress::fit(data, f, CorrelationKind::Unstructured, options);
  REQUIRE(fit.converged);

  const int g = static_cast<int>(data.wave_grid.size());
  Eigen::MatrixXd cross = Eigen::MatrixXd::Zero(g, g);
  Eigen::MatrixXd count = Eigen::MatrixXd::Zero(g, g);
  for (int i = 0; i < fit.n_clusters(); ++i) {
    const auto& c = fit.cluster[i];
    const Eigen::VectorXd r = c.resid.cwiseQuotient(c.var.cwiseSqrt());
    for (int s = 0; s < r.size(); ++s) {
      for (int t = s + 1; t < r.size(); ++t) {
        const int gs = wave_index(data.wave_grid, data.clusters[i].waves[s]);
        const int gt = wave_index(data.wave_grid, data.clusters[i].waves[t]);
        cross(gs, gt) += r[s] * r[t];
        count(gs, gt) += 1.0;
      }
    }
  }
  for (int s = 0; s < g; ++s) {
    for (int t = s + 1; t < g; ++t) {
      const double expect =
          cross(s, t) / (fit.phi * (count(s, t) - data.p));
      CHECK(fit.correlation.matrix(s, t) ==
            doctest::Approx(expect).epsilon(1e-8));
    }
  }
}

TEST_CASE("sandwich covariance matches its dense-algebra definition") {
  const Family f(FamilyKind::BinaryLogit);
  const auto data = oracle::random_panel(f, 50, 4, {0.5, 0.3, -0.2}, 808);
  const GeeFit fit = geepress::fit(data, f, CorrelationKind::Exchangeable);
  REQUIRE(fit.converged);

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(data.p, data.p);
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(data.p, data.p);
  for (const auto& c : fit.cluster) {
    const Eigen::MatrixXd Vinv = c.V.inverse();
    M += c.D.transpose() * Vinv * c.D;
    const Eigen::VectorXd u = c.D.transpose() * Vinv * c.resid;
    J += u * u.transpose();
  }
  const Eigen::MatrixXd Minv = M.inverse();
  const Eigen::MatrixXd expected = Minv * J * Minv;
  CHECK((fit.sandwich_cov - expected).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((sandwich(fit) - expected).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((fit.model_cov - Minv).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("cluster leverages sum to the coefficient dimension") {
  const Family f(FamilyKind::PoissonLog);
  const auto data = oracle::random_panel(f, 45, 5, {0.6, 0.2, 0.3}, 909);
  for (CorrelationKind k :
       {CorrelationKind::Independence, CorrelationKind::Ar1,
        CorrelationKind::Unstructured}) {
    const GeeFit fit = geepress::fit(data, f, k);
    REQUIRE(fit.converged);
    double trace = 0.0;
    for (int i = 0; i < fit.n_clusters(); ++i) trace += leverage(fit, i).trace();
    CHECK(trace == doctest::Approx(data.p).epsilon(1e-8));
  }
}

TEST_CASE("fixed dispersion mode pins phi at one") {
  const Family f(FamilyKind::BinaryLogit);
  const auto data = oracle::random_panel(f, 40, 4, {0.4, 0.3, 0.2}, 111);
  FitOptions options;
  options.phi_mode = PhiMode::FixedOne;
  const GeeFit fit = geepress::fit(data, f, CorrelationKind::Ar1, options);
  REQUIRE(fit.converged);
  CHECK(fit.phi == 1.0);
}

TEST_CASE("warm starts reach the same solution faster") {
  const Family f(FamilyKind::BinaryLogit);
  const auto data = oracle::random_panel(f, 60, 5, {0.5, 0.4, 0.3}, 222);
  const GeeFit cold = geepress::fit(data, f, CorrelationKind::Exchangeable);
  REQUIRE(cold.converged);

  FitOptions warm_options;
  warm_options.initial_beta = cold.beta;
  const GeeFit warm =
      geepress::fit(data, f, CorrelationKind::Exchangeable, warm_options);
  REQUIRE(warm.converged);
  CHECK((warm.beta - cold.beta).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(warm.iterations <= cold.iterations);
}

TEST_CASE("iteration caps are honest about non-convergence") {
  const Family f(FamilyKind::BinaryLogit);
  const auto data = oracle::random_panel(f, 40, 4, {0.5, 0.4, 0.3}, 333);
  FitOptions options;
  options.max_iter = 1;
  const GeeFit fit = geepress::fit(data, f, CorrelationKind::Exchangeable, options);
  CHECK_FALSE(fit.converged);
  CHECK(fit.iterations == 1);
}

TEST_CASE("rank-deficient designs are rejected") {
  const Family f(FamilyKind::GaussianIdentity);
  auto data = oracle::random_panel(f, 20, 4, {0.5, 0.3, -0.2}, 444);
  for (auto& c : data.clusters) c.X.col(2) = 2.0 * c.X.col(1);
  CHECK_THROWS_AS(geepress::fit(data, f, CorrelationKind::Independence),
                  RankDeficiencyError);
}

TEST_CASE("irregular wave schedules fit through the gap-aware ar1 path") {
  const Family f(FamilyKind::GaussianIdentity);
  const auto data = oracle::cohort_panel(f, 120, 555);
  FitOptions options;
  const GeeFit fit = geepress::fit(data, f, CorrelationKind::Ar1, options);
  REQUIRE(fit.converged);
  CHECK(fit.correlation.alpha >= 0.0);  // gap-aware search is bounded below
  CHECK(fit.correlation.alpha <= options.alpha_max);

  // the reported alpha is the fixed point of its own moment objective
  std::vector<Eigen::VectorXd> pearson;
  std::vector<std::vector<double>> waves;
  for (int i = 0; i < fit.n_clusters(); ++i) {
    pearson.push_back(
        fit.cluster[i].resid.cwiseQuotient(fit.cluster[i].var.cwiseSqrt()));
    waves.push_back(data.clusters[i].waves);
  }
  const WorkingCorrelation re =
      estimate_alpha(CorrelationKind::Ar1, pearson, waves, data.wave_grid,
                     fit.phi, data.p, options);
  CHECK(re.alpha == doctest::Approx(fit.correlation.alpha).epsilon(1e-6));

  // and the wide unstructured grid still fits
  const GeeFit un = geepress::fit(data, f, CorrelationKind::Unstructured);
  CHECK(un.converged);
}

TEST_CASE("unstructured fits need jointly observed wave pairs") {
  const Family f(FamilyKind::GaussianIdentity);
  // two disjoint visit patterns: waves {1,2} and {3,4} never co-occur
  std::vector<Eigen::MatrixXd> X;
  std::vector<Eigen::VectorXd> y;
  std::vector<std::vector<double>> waves;
  std::mt19937_64 gen(666);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    Eigen::MatrixXd Xi(2, 2);
    Xi << 1, normal(gen), 1, normal(gen);
    Eigen::VectorXd yi(2);
    yi << normal(gen), normal(gen);
    X.push_back(Xi);
    y.push_back(yi);
    waves.push_back(i % 2 == 0 ? std::vector<double>{1.0, 2.0}
                               : std::vector<double>{3.0, 4.0});
  }
  const auto data = oracle::make_dataset(X, y, waves);
  CHECK_THROWS_AS(geepress::fit(data, f, CorrelationKind::Unstructured),
                  StructureInfeasibleError);
  CHECK_NOTHROW(geepress::fit(data, f, CorrelationKind::Exchangeable));
}

TEST_CASE("clusters of size one carry no correlation information") {
  const Family f(FamilyKind::GaussianIdentity);
  const auto data = oracle::random_panel(f, 30, 1, {0.5, 0.3, -0.2}, 777);
  // no within-cluster pairs: every correlated structure is infeasible
  CHECK_THROWS_AS(geepress::fit(data, f, CorrelationKind::Exchangeable),
                  StructureInfeasibleError);
  // independence is fine and matches OLS
  const GeeFit fit = geepress::fit(data, f, CorrelationKind::Independence);
  REQUIRE(fit.converged);
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
  stack(data, X, y);
  CHECK((fit.beta - oracle::ols_fit(X, y)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("offsets shift the linear predictor of restricted fits") {
  const Family f(FamilyKind::PoissonLog);
  const auto data = oracle::random_panel(f, 50, 4, {0.6, 0.3, 0.2}, 888);

  // drop the last column and absorb a fixed coefficient 0.25 for it into
  // an offset; the reduced fit must equal a direct fit of the reduced
  // model with that offset
  LongitudinalDataset reduced = data;
  std::vector<Eigen::VectorXd> offsets;
  for (auto& c : reduced.clusters) {
    offsets.push_back(0.25 * c.X.col(2));
    c.X.conservativeResize(Eigen::NoChange, 2);
  }
  reduced.rebuild_wave_grid();

  FitOptions options;
  const GeeFit with_offset = detail::fit_with_offset(
      reduced, f, CorrelationKind::Independence, options, &offsets);
  REQUIRE(with_offset.converged);

  // oracle: IRLS on an augmented model is unavailable, but the estimating
  // equation of the offset fit must vanish at its own solution
  Eigen::VectorXd score = Eigen::VectorXd::Zero(2);
  for (int i = 0; i < with_offset.n_clusters(); ++i) {
    const auto& c = with_offset.cluster[i];
    score += c.D.transpose() * c.V.llt().solve(c.resid);
  }
  CHECK(score.norm() < 1e-6);

  // and the fitted means must reflect the offset: mu = exp(X2 b + off)
  const auto& c0 = with_offset.cluster[0];
  const Eigen::VectorXd eta =
      reduced.clusters[0].X * with_offset.beta + offsets[0];
  CHECK((c0.mu - eta.array().exp().matrix()).cwiseAbs().maxCoeff() < 1e-10);
}
