#include "geepress/inference.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "geepress/errors.hpp"

namespace geepress {

namespace {

double chi_squared_pvalue(double statistic, int df) {
  const boost::math::chi_squared_distribution<double> dist(df);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

void check_hypothesis(const LinearHypothesis& h, int p) {
  const Eigen::Index q = h.C.rows();
  if (q == 0 || h.C.cols() != p) {
    throw ParameterError("hypothesis matrix must be q x p with q >= 1");
  }
  if (h.r.size() != 0 && h.r.size() != q) {
    throw ParameterError("hypothesis right-hand side has the wrong length");
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(h.C);
  const double tol =
      1e-12 * svd.singularValues().maxCoeff() * std::max<Eigen::Index>(q, p);
  if ((svd.singularValues().array() > tol).count() < q) {
    throw ParameterError("hypothesis matrix does not have full row rank");
  }
}

Eigen::VectorXd rhs_or_zero(const LinearHypothesis& h) {
  if (h.r.size() > 0) return h.r;
  return Eigen::VectorXd::Zero(h.C.rows());
}

/// True when every row of C pins exactly one (distinct) coefficient.
bool coordinate_rows(const Eigen::MatrixXd& C, std::vector<int>* pinned) {
  pinned->clear();
  for (Eigen::Index k = 0; k < C.rows(); ++k) {
    int col = -1;
    for (Eigen::Index j = 0; j < C.cols(); ++j) {
      if (C(k, j) != 0.0) {
        if (col >= 0) return false;
        col = static_cast<int>(j);
      }
    }
    if (col < 0) return false;
    pinned->push_back(col);
  }
  std::vector<int> sorted = *pinned;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

LinearHypothesis LinearHypothesis::zero_coefficients(
    const std::vector<int>& indices, int p) {
  if (indices.empty()) {
    throw ParameterError("hypothesis restricts no coefficients");
  }
  LinearHypothesis h;
  h.C = Eigen::MatrixXd::Zero(indices.size(), p);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 0 || indices[k] >= p) {
      throw ParameterError("coefficient index out of range");
    }
    h.C(static_cast<Eigen::Index>(k), indices[k]) = 1.0;
  }
  h.r = Eigen::VectorXd::Zero(indices.size());
  return h;
}

TestResult wald_test(const GeeFit& fit, const LinearHypothesis& hypothesis) {
  if (!fit.converged) {
    throw ConvergenceError("Wald test requested for an unconverged fit");
  }
  check_hypothesis(hypothesis, fit.p());
  const Eigen::VectorXd r = rhs_or_zero(hypothesis);
  const Eigen::VectorXd d = hypothesis.C * fit.beta - r;
  const Eigen::MatrixXd S =
      hypothesis.C * fit.sandwich_cov * hypothesis.C.transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(S);
  if (!lu.isInvertible()) {
    throw RankDeficiencyError(
        "restricted sandwich covariance is singular in the Wald test");
  }
  TestResult out;
  out.kind = TestKind::Wald;
  out.df = static_cast<int>(hypothesis.C.rows());
  out.statistic = d.dot(lu.solve(d));
  out.p_value = chi_squared_pvalue(out.statistic, out.df);
  return out;
}

TestResult score_test(const LongitudinalDataset& data, const Family& family,
                      CorrelationKind kind, const LinearHypothesis& hypothesis,
                      const FitOptions& options) {
  const int p = data.p;
  check_hypothesis(hypothesis, p);
  const int q = static_cast<int>(hypothesis.C.rows());
  if (q >= p) {
    throw ParameterError(
        "score test requires at least one unconstrained coefficient");
  }
  const Eigen::VectorXd r = rhs_or_zero(hypothesis);

  // Rotate the coefficients to z = T beta with T = [K; C]: the first p-q
  // coordinates are free, the last q are pinned at r under the null.  For
  // hypotheses that pin individual coefficients K simply selects the free
  // columns; otherwise K is an orthonormal null-space basis of C.
  Eigen::MatrixXd K(p - q, p);
  std::vector<int> pinned;
  if (coordinate_rows(hypothesis.C, &pinned)) {
    K.setZero();
    int row = 0;
    for (int j = 0; j < p; ++j) {
      if (std::find(pinned.begin(), pinned.end(), j) == pinned.end()) {
        K(row++, j) = 1.0;
      }
    }
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(hypothesis.C, Eigen::ComputeFullV);
    K = svd.matrixV().rightCols(p - q).transpose();
  }
  Eigen::MatrixXd T(p, p);
  T.topRows(p - q) = K;
  T.bottomRows(q) = hypothesis.C;
  Eigen::FullPivLU<Eigen::MatrixXd> tlu(T);
  if (!tlu.isInvertible()) {
    throw ParameterError("hypothesis reparameterization is singular");
  }
  const Eigen::MatrixXd Tinv = tlu.inverse();

  // Restricted fit: free columns of the rotated design, with the pinned
  // part absorbed into an offset.
  LongitudinalDataset restricted;
  restricted.p = p - q;
  restricted.wave_grid = data.wave_grid;
  restricted.clusters.reserve(data.clusters.size());
  std::vector<Eigen::VectorXd> offsets;
  offsets.reserve(data.clusters.size());
  std::vector<Eigen::MatrixXd> rotated;
  rotated.reserve(data.clusters.size());
  for (const auto& c : data.clusters) {
    const Eigen::MatrixXd Xt = c.X * Tinv;
    rotated.push_back(Xt);
    Cluster rc;
    rc.id = c.id;
    rc.y = c.y;
    rc.waves = c.waves;
    rc.X = Xt.leftCols(p - q);
    restricted.clusters.push_back(std::move(rc));
    offsets.push_back(Xt.rightCols(q) * r);
  }
  FitOptions ropt = options;
  ropt.initial_beta.reset();
  const GeeFit rfit =
      detail::fit_with_offset(restricted, family, kind, ropt, &offsets);
  if (!rfit.converged) {
    throw ConvergenceError("restricted fit did not converge in the score test");
  }

  // Full-model score and information blocks, evaluated at the restricted
  // estimates (coefficients, correlation, dispersion).
  Eigen::VectorXd z(p);
  z.head(p - q) = rfit.beta;
  z.tail(q) = r;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(p, p);
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(p, p);
  Eigen::VectorXd U = Eigen::VectorXd::Zero(p);
  for (std::size_t i = 0; i < data.clusters.size(); ++i) {
    const Cluster& c = data.clusters[i];
    const MeanResponse mr = mean_response(family, rotated[i], z);
    const Eigen::VectorXd resid = c.y - mr.mu;
    const Eigen::MatrixXd R = build_correlation(rfit.correlation, c.waves);
    const Eigen::VectorXd sd = mr.var.cwiseSqrt();
    const Eigen::MatrixXd V =
        rfit.phi * (sd.asDiagonal() * R * sd.asDiagonal());
    Eigen::LLT<Eigen::MatrixXd> llt(V);
    if (llt.info() != Eigen::Success) {
      throw RankDeficiencyError("working covariance of cluster '" + c.id +
                                "' is not positive definite");
    }
    const Eigen::VectorXd u = mr.D.transpose() * llt.solve(resid);
    M.noalias() += mr.D.transpose() * llt.solve(mr.D);
    S.noalias() += u * u.transpose();
    U += u;
  }

  const Eigen::MatrixXd M11 = M.topLeftCorner(p - q, p - q);
  const Eigen::MatrixXd M21 = M.bottomLeftCorner(q, p - q);
  Eigen::FullPivLU<Eigen::MatrixXd> m11lu(M11);
  if (!m11lu.isInvertible()) {
    throw RankDeficiencyError("restricted scoring matrix is singular");
  }
  Eigen::MatrixXd B(q, p);
  B.leftCols(p - q) = -(m11lu.solve(M21.transpose())).transpose();
  B.rightCols(q) = Eigen::MatrixXd::Identity(q, q);
  const Eigen::MatrixXd V22 = B * S * B.transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> v22lu(V22);
  if (!v22lu.isInvertible()) {
    throw RankDeficiencyError(
        "empirical score covariance is singular in the score test");
  }
  const Eigen::VectorXd u2 = U.tail(q);

  TestResult out;
  out.kind = TestKind::Score;
  out.df = q;
  out.statistic = u2.dot(v22lu.solve(u2));
  out.p_value = chi_squared_pvalue(out.statistic, out.df);
  return out;
}

}  // namespace geepress
