#ifndef GEEPRESS_FAMILY_HPP
#define GEEPRESS_FAMILY_HPP

#include <Eigen/Dense>
#include <string>

namespace geepress {

enum class FamilyKind {
  BinaryLogit,       // Bernoulli response, logit link
  PoissonLog,        // count response, log link
  GaussianIdentity,  // continuous response, identity link
};

std::string family_name(FamilyKind kind);
FamilyKind parse_family(const std::string& name);  // throws ParameterError

/// Marginal mean/variance specification of a generalized linear model.
/// Linear predictors are clamped to [-kEtaClamp, kEtaClamp] before applying
/// the inverse link, and Bernoulli means are kept strictly inside (0, 1),
/// so every derived quantity (variance, link derivative, quasi-likelihood)
/// stays finite even for extreme coefficients.
class Family {
public:
  static constexpr double kEtaClamp = 30.0;
  static constexpr double kMuEps = 1e-10;  // Bernoulli mean clamp

  explicit Family(FamilyKind kind) : kind_(kind) {}

  FamilyKind kind() const { return kind_; }
  std::string name() const { return family_name(kind_); }

  double inv_link(double eta) const;    // g^{-1}, after clamping eta
  double link(double mu) const;         // g
  double variance(double mu) const;     // h(mu), the variance function
  double link_deriv(double mu) const;   // g'(mu) = d eta / d mu

  /// Per-observation quasi-likelihood contribution (unit dispersion).
  double quasi_loglik(double y, double mu) const;

  /// True when y is a legal response value for this family.
  bool valid_response(double y) const;

private:
  FamilyKind kind_;
};

/// Mean-model quantities for one cluster at a given coefficient vector:
/// mu = g^{-1}(X beta), the Jacobian D = d mu / d beta' = L^{-1} X with
/// L = diag(g'(mu)), and the variance-function diagonal h(mu).
struct MeanResponse {
  Eigen::VectorXd mu;
  Eigen::MatrixXd D;
  Eigen::VectorXd var;         // h(mu_t)
  Eigen::VectorXd link_deriv;  // g'(mu_t)
};

/// The optional offset is added to the linear predictor: eta = X beta + off.
MeanResponse mean_response(const Family& family, const Eigen::MatrixXd& X,
                           const Eigen::VectorXd& beta,
                           const Eigen::VectorXd& offset = Eigen::VectorXd());

/// Quasi-likelihood of a whole response vector, scaled by the dispersion
/// estimate: phi * sum_t ql(y_t, mu_t).
double quasi_likelihood(const Family& family, const Eigen::VectorXd& y,
                        const Eigen::VectorXd& mu, double phi);

}  // namespace geepress

#endif  // GEEPRESS_FAMILY_HPP
