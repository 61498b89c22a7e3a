#include "geepress/family.hpp"

#include <algorithm>
#include <cmath>

#include "geepress/errors.hpp"

namespace geepress {

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::BinaryLogit: return "binary";
    case FamilyKind::PoissonLog: return "poisson";
    case FamilyKind::GaussianIdentity: return "gaussian";
  }
  return "unknown";
}

FamilyKind parse_family(const std::string& name) {
  if (name == "binary" || name == "binomial" || name == "logit") {
    return FamilyKind::BinaryLogit;
  }
  if (name == "poisson" || name == "count" || name == "log") {
    return FamilyKind::PoissonLog;
  }
  if (name == "gaussian" || name == "normal" || name == "identity") {
    return FamilyKind::GaussianIdentity;
  }
  throw ParameterError("unknown family '" + name +
                       "' (expected binary, poisson, or gaussian)");
}

double Family::inv_link(double eta) const {
  eta = std::clamp(eta, -kEtaClamp, kEtaClamp);
  switch (kind_) {
    case FamilyKind::BinaryLogit: {
      const double mu = 1.0 / (1.0 + std::exp(-eta));
      return std::clamp(mu, kMuEps, 1.0 - kMuEps);
    }
    case FamilyKind::PoissonLog:
      return std::exp(eta);
    case FamilyKind::GaussianIdentity:
      return eta;
  }
  return eta;
}

double Family::link(double mu) const {
  switch (kind_) {
    case FamilyKind::BinaryLogit: {
      const double m = std::clamp(mu, kMuEps, 1.0 - kMuEps);
      return std::log(m / (1.0 - m));
    }
    case FamilyKind::PoissonLog:
      return std::log(mu);
    case FamilyKind::GaussianIdentity:
      return mu;
  }
  return mu;
}

double Family::variance(double mu) const {
  switch (kind_) {
    case FamilyKind::BinaryLogit:
      return mu * (1.0 - mu);
    case FamilyKind::PoissonLog:
      return mu;
    case FamilyKind::GaussianIdentity:
      return 1.0;
  }
  return 1.0;
}

double Family::link_deriv(double mu) const {
  switch (kind_) {
    case FamilyKind::BinaryLogit:
      return 1.0 / (mu * (1.0 - mu));
    case FamilyKind::PoissonLog:
      return 1.0 / mu;
    case FamilyKind::GaussianIdentity:
      return 1.0;
  }
  return 1.0;
}

double Family::quasi_loglik(double y, double mu) const {
  switch (kind_) {
    case FamilyKind::BinaryLogit:
      return y * std::log(mu / (1.0 - mu)) + std::log(1.0 - mu);
    case FamilyKind::PoissonLog:
      return y * std::log(mu) - mu;
    case FamilyKind::GaussianIdentity:
      return -0.5 * (y - mu) * (y - mu);
  }
  return 0.0;
}

bool Family::valid_response(double y) const {
  if (!std::isfinite(y)) return false;
  switch (kind_) {
    case FamilyKind::BinaryLogit:
      return y == 0.0 || y == 1.0;
    case FamilyKind::PoissonLog:
      return y >= 0.0 && y == std::floor(y);
    case FamilyKind::GaussianIdentity:
      return true;
  }
  return false;
}

MeanResponse mean_response(const Family& family, const Eigen::MatrixXd& X,
                           const Eigen::VectorXd& beta,
                           const Eigen::VectorXd& offset) {
  const Eigen::Index n = X.rows();
  MeanResponse out;
  out.mu.resize(n);
  out.var.resize(n);
  out.link_deriv.resize(n);
  Eigen::VectorXd eta = X * beta;
  if (offset.size() > 0) eta += offset;
  for (Eigen::Index t = 0; t < n; ++t) {
    const double mu = family.inv_link(eta[t]);
    out.mu[t] = mu;
    out.var[t] = family.variance(mu);
    out.link_deriv[t] = family.link_deriv(mu);
  }
  // D = L^{-1} X with L = diag(g'(mu)).
  out.D = out.link_deriv.cwiseInverse().asDiagonal() * X;
  return out;
}

double quasi_likelihood(const Family& family, const Eigen::VectorXd& y,
                        const Eigen::VectorXd& mu, double phi) {
  double total = 0.0;
  for (Eigen::Index t = 0; t < y.size(); ++t) {
    total += family.quasi_loglik(y[t], mu[t]);
  }
  return phi * total;
}

}  // namespace geepress
