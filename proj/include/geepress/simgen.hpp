#ifndef GEEPRESS_SIMGEN_HPP
#define GEEPRESS_SIMGEN_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "geepress/correlation.hpp"
#include "geepress/data.hpp"
#include "geepress/family.hpp"
#include "geepress/rng.hpp"

namespace geepress {

/// Attainable correlation range for a pair of margins (Frechet-type
/// bounds).  Binary pairs have closed-form limits; Poisson pairs use a
/// high-resolution quadrature over comonotone / antimonotone couplings.
struct CorrelationBounds {
  double lo = -1.0;
  double hi = 1.0;
};

CorrelationBounds feasible_correlation_bounds(FamilyKind family, double mu_a,
                                              double mu_b);

/// Bivariate standard normal CDF P(Z1 <= h, Z2 <= k) at correlation rho,
/// computed by Gauss-Legendre quadrature of the smooth single-integral
/// representation.
double bvn_cdf(double h, double k, double rho);

/// Pearson correlation of the generated pair (Y_a, Y_b) induced by a latent
/// normal pair with correlation delta and the given margins.
double pair_correlation_from_latent(FamilyKind family, double mu_a,
                                    double mu_b, double delta);

/// Solves the forward map for the latent correlation delta that produces
/// the target Pearson correlation rho between the two margins.  Throws
/// RangeViolationError when rho is outside the attainable range.
double solve_latent_correlation(FamilyKind family, double mu_a, double mu_b,
                                double rho);

/// Memoizing, thread-safe wrapper around solve_latent_correlation.  A
/// simulation scenario only ever needs a handful of (margin, margin,
/// correlation) combinations, so caching removes nearly all solver cost.
class LatentSolver {
public:
  double latent(FamilyKind family, double mu_a, double mu_b, double rho);

private:
  using Key = std::tuple<int, double, double, double>;
  std::map<Key, double> cache_;
  std::mutex mutex_;
};

/// Draws one cluster of correlated responses with the given marginal means
/// and target correlation matrix via a Gaussian copula: latent pairwise
/// correlations are solved per entry, the latent matrix is repaired to
/// positive definiteness when necessary (logged), and margins are produced
/// by thresholding (binary) or inverse-CDF mapping (counts).
Eigen::VectorXd generate_cluster(FamilyKind family, const Eigen::VectorXd& mu,
                                 const Eigen::MatrixXd& r_target,
                                 Philox4x32& rng, LatentSolver& solver,
                                 RepairLog* log = nullptr);

enum class Balance { Balanced, Unbalanced };

/// One simulation design cell: marginal family, balance, true correlation
/// structure and strength, and sample size.  Covariates follow the standard
/// design: an intercept, a subject-level Bernoulli(1/2) covariate, and an
/// occasion-level Bernoulli(1/2) covariate.
struct ScenarioSpec {
  FamilyKind family = FamilyKind::BinaryLogit;
  Balance balance = Balance::Balanced;
  CorrelationKind true_structure = CorrelationKind::Ar1;  // ar1 | exch | un
  double alpha = 0.2;
  int n_subjects = 50;
  int max_waves = 5;
  Eigen::VectorXd beta;  // empty selects default_beta(family)
  std::uint64_t seed = 0;

  /// Decay exponent of the unstructured truth: alpha^{separation^0.5}.
  static constexpr double kUnExponent = 0.5;

  static Eigen::VectorXd default_beta(FamilyKind family);

  /// Canonical id, e.g. "binary-balanced-ar1-a0.2-N50".
  std::string cell_id() const;
  static ScenarioSpec from_cell_id(const std::string& id, std::uint64_t seed);

  /// True correlation among the max_waves occasions.
  Eigen::MatrixXd true_correlation() const;

  Eigen::VectorXd effective_beta() const;
};

/// Cluster sizes for the unbalanced design: 3, 4, or 5 occasions with
/// probabilities 0.15 / 0.15 / 0.70 (later waves dropped first).
int draw_cluster_size(Balance balance, int max_waves, Philox4x32& rng);

/// Generates one full replicate dataset for a scenario.  Each replicate
/// draws from its own counter-based stream, so datasets are reproducible
/// independently of evaluation order.
LongitudinalDataset generate_dataset(const ScenarioSpec& spec, int replicate,
                                     LatentSolver& solver,
                                     RepairLog* log = nullptr);

/// The standard simulation grid: family x balance x alpha x structure x N,
/// 48 cells in reporting order.
std::vector<ScenarioSpec> standard_scenarios(std::uint64_t seed);

}  // namespace geepress

#endif  // GEEPRESS_SIMGEN_HPP
