#ifndef GEEPRESS_GEE_HPP
#define GEEPRESS_GEE_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "geepress/correlation.hpp"
#include "geepress/data.hpp"
#include "geepress/family.hpp"

namespace geepress {

enum class PhiMode {
  FixedOne,  // dispersion pinned at 1
  Estimate,  // Pearson moment estimate
};

struct FitOptions {
  int max_iter = 200;
  double tol = 1e-8;  // convergence threshold on max |delta beta|
  PhiMode phi_mode = PhiMode::Estimate;
  double alpha_min = -0.99;  // clamp range for correlation estimates
  double alpha_max = 0.99;
  std::optional<Eigen::VectorXd> initial_beta;  // warm start
};

/// Per-cluster quantities cached at the final parameter estimates.
struct ClusterCache {
  Eigen::VectorXd mu;          // fitted means
  Eigen::VectorXd resid;       // raw residuals y - mu
  Eigen::VectorXd var;         // variance function h(mu)
  Eigen::VectorXd link_deriv;  // g'(mu)
  Eigen::MatrixXd D;           // d mu / d beta'
  Eigen::MatrixXd V;           // working covariance phi A^1/2 R A^1/2
  Eigen::MatrixXd H;           // cluster leverage D M^-1 D' V^-1
};

/// Result of a GEE fit.  All matrices are evaluated at the final estimates;
/// model_cov is the inverse scoring matrix M^-1 and sandwich_cov the robust
/// covariance M^-1 J M^-1 (both symmetrized).
struct GeeFit {
  FamilyKind family = FamilyKind::GaussianIdentity;
  WorkingCorrelation correlation;
  Eigen::VectorXd beta;
  double phi = 1.0;
  Eigen::MatrixXd model_cov;
  Eigen::MatrixXd sandwich_cov;
  std::vector<ClusterCache> cluster;
  double quasi_lik = 0.0;  // phi-scaled quasi-likelihood at the estimates
  int total_obs = 0;
  int iterations = 0;
  bool converged = false;
  double max_step = 0.0;  // last max |delta beta|
  double ee_norm = 0.0;   // ||sum_i D_i' V_i^-1 e_i|| at the estimates
  std::vector<std::string> notes;

  int p() const { return static_cast<int>(beta.size()); }
  int n_clusters() const { return static_cast<int>(cluster.size()); }
};

/// Fits a marginal GEE model by Fisher scoring with moment updates of the
/// dispersion and correlation parameters after every coefficient step.
/// Starting values: options.initial_beta when given, otherwise the
/// independence fit (itself started at zero).  The fit is declared
/// converged when the coefficient step drops to options.tol and the
/// estimating-equation norm is below 1e-6 * (1 + ||beta||).
GeeFit fit(const LongitudinalDataset& data, const Family& family,
           CorrelationKind kind, const FitOptions& options = {});

/// Moment estimate of the dispersion: sum of squared Pearson residuals over
/// (total_obs - p).  Returns exactly 1 under PhiMode::FixedOne.
double estimate_phi(const std::vector<Eigen::VectorXd>& pearson,
                    int total_obs, int p, PhiMode mode);

/// Moment estimates of the working correlation parameters from per-cluster
/// Pearson residual vectors.  AR(1) with unit wave spacing and the
/// exchangeable structure use closed-form lag products with a p-degree
/// correction in the denominator; AR(1) with non-unit spacing minimizes the
/// squared gap between residual products and alpha^{separation} by golden
/// section; unstructured entries are per-wave-pair moments on the grid.
WorkingCorrelation estimate_alpha(
    CorrelationKind kind, const std::vector<Eigen::VectorXd>& pearson,
    const std::vector<std::vector<double>>& waves,
    const std::vector<double>& wave_grid, double phi, int p,
    const FitOptions& options, RepairLog* log = nullptr);

/// Recomputes the robust covariance from the fit's cluster caches.
Eigen::MatrixXd sandwich(const GeeFit& fit);

/// Leverage matrix H_i of one cluster (cached by fit()).
const Eigen::MatrixXd& leverage(const GeeFit& fit, int cluster_index);

/// Relative LU pivot threshold below which (I - H_i) is treated as
/// singular.  Deleting a cluster that carries essentially all of the
/// information about some coefficient leaves (I - H_i) singular only up
/// to rounding, so the check needs a real margin, not machine epsilon.
inline constexpr double kDeletionPivotThreshold = 1e-8;

/// One-step deletion estimate of beta_hat - beta_hat_(i): the change in the
/// coefficients caused by removing cluster i, approximated without refitting
/// as M^-1 D_i' V_i^-1 (I - H_i)^-1 e_i.
Eigen::VectorXd one_step_deletion(const GeeFit& fit, int cluster_index);

/// Exact deletion: refits without cluster `cluster_index`.  Pass the full
/// fit's coefficients through options.initial_beta to warm-start the refit.
GeeFit exact_deletion(const LongitudinalDataset& data, const Family& family,
                      CorrelationKind kind, const FitOptions& options,
                      int cluster_index);

namespace detail {

/// GEE fit with per-cluster linear-predictor offsets (empty = none).
/// Used by the restricted fits inside score tests.
GeeFit fit_with_offset(const LongitudinalDataset& data, const Family& family,
                       CorrelationKind kind, const FitOptions& options,
                       const std::vector<Eigen::VectorXd>* offsets);

/// Throws StructureInfeasibleError when the dataset cannot identify the
/// requested structure's parameters (too few residual pairs).
void check_structure_feasible(const LongitudinalDataset& data,
                              CorrelationKind kind);

}  // namespace detail

}  // namespace geepress

#endif  // GEEPRESS_GEE_HPP
