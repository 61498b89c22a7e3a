#include "geepress/simgen.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <sstream>

#include "geepress/errors.hpp"

namespace geepress {

namespace {

const boost::math::normal_distribution<double> kStdNormal;

double norm_cdf(double x) { return boost::math::cdf(kStdNormal, x); }
double norm_quantile(double p) { return boost::math::quantile(kStdNormal, p); }

constexpr double kLatentLimit = 0.999999;  // search interval for delta
constexpr double kTailMass = 1e-12;        // Poisson CDF truncation
constexpr int kBoundsGridSize = 1000000;   // coupling quadrature resolution

/// Cumulative Poisson probabilities up to negligible tail mass.
std::vector<double> poisson_cdf_table(double mu) {
  std::vector<double> cdf;
  double pmf = std::exp(-mu);
  double cum = pmf;
  cdf.push_back(cum);
  int k = 0;
  while (cum < 1.0 - kTailMass && k < 4000) {
    ++k;
    pmf *= mu / k;
    cum += pmf;
    cdf.push_back(cum);
  }
  return cdf;
}

int poisson_quantile(const std::vector<double>& cdf, double u) {
  const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
  return static_cast<int>(it == cdf.end() ? cdf.size() - 1
                                          : it - cdf.begin());
}

const std::vector<double>& cached_poisson_cdf(double mu) {
  thread_local std::map<double, std::vector<double>> tables;
  auto it = tables.find(mu);
  if (it == tables.end()) {
    it = tables.emplace(mu, poisson_cdf_table(mu)).first;
  }
  return it->second;
}

/// 64-point Gauss-Legendre nodes/weights on [-1, 1].
struct GaussLegendre64 {
  std::array<double, 64> node{};
  std::array<double, 64> weight{};
  GaussLegendre64() {
    // Newton iteration on Legendre polynomials.
    constexpr int n = 64;
    for (int i = 0; i < n / 2; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (x * p0 - p1) / (x * x - 1.0);
        const double dx = p0 / pp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      node[i] = -x;
      node[n - 1 - i] = x;
      weight[i] = weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
  }
};

const GaussLegendre64& gl64() {
  static const GaussLegendre64 table;
  return table;
}

/// Upper-tail bivariate normal probability P(Z1 > h, Z2 > k).
double bvn_upper(double h, double k, double rho) {
  return 1.0 - norm_cdf(h) - norm_cdf(k) + bvn_cdf(h, k, rho);
}

double binary_pair_correlation(double mu_a, double mu_b, double delta) {
  const double za = norm_quantile(mu_a);
  const double zb = norm_quantile(mu_b);
  const double p11 = bvn_cdf(za, zb, delta);
  const double denom =
      std::sqrt(mu_a * (1.0 - mu_a) * mu_b * (1.0 - mu_b));
  return (p11 - mu_a * mu_b) / denom;
}

double poisson_pair_correlation(double mu_a, double mu_b, double delta) {
  // E[Ya Yb] = sum_{j,k>=1} P(Ya >= j, Yb >= k), with each tail event
  // expressed through the latent normal pair.
  const std::vector<double>& cdf_a = cached_poisson_cdf(mu_a);
  const std::vector<double>& cdf_b = cached_poisson_cdf(mu_b);
  std::vector<double> za(cdf_a.size()), zb(cdf_b.size());
  for (std::size_t m = 0; m < cdf_a.size(); ++m) {
    za[m] = norm_quantile(std::min(cdf_a[m], 1.0 - 1e-16));
  }
  for (std::size_t m = 0; m < cdf_b.size(); ++m) {
    zb[m] = norm_quantile(std::min(cdf_b[m], 1.0 - 1e-16));
  }
  double exy = 0.0;
  for (std::size_t j = 0; j < za.size(); ++j) {
    for (std::size_t k = 0; k < zb.size(); ++k) {
      exy += bvn_upper(za[j], zb[k], delta);
    }
  }
  return (exy - mu_a * mu_b) / std::sqrt(mu_a * mu_b);
}

}  // namespace

double bvn_cdf(double h, double k, double rho) {
  if (rho == 0.0) return norm_cdf(h) * norm_cdf(k);
  // P(Z1<=h, Z2<=k; rho) = Phi(h)Phi(k) + (1/2pi) int_0^asin(rho)
  //   exp(-(h^2 - 2 h k sin t + k^2) / (2 cos^2 t)) dt,
  // a smooth integrand handled well by fixed Gauss-Legendre quadrature.
  const double upper = std::asin(std::clamp(rho, -1.0, 1.0));
  const auto& q = gl64();
  double integral = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double t = 0.5 * upper * (q.node[i] + 1.0);
    const double c2 = std::cos(t) * std::cos(t);
    const double expo =
        -(h * h - 2.0 * h * k * std::sin(t) + k * k) / (2.0 * c2);
    integral += q.weight[i] * std::exp(expo);
  }
  integral *= 0.5 * upper / (2.0 * M_PI);
  return norm_cdf(h) * norm_cdf(k) + integral;
}

CorrelationBounds feasible_correlation_bounds(FamilyKind family, double mu_a,
                                              double mu_b) {
  CorrelationBounds out;
  switch (family) {
    case FamilyKind::GaussianIdentity:
      return out;  // [-1, 1]
    case FamilyKind::BinaryLogit: {
      if (!(mu_a > 0.0 && mu_a < 1.0 && mu_b > 0.0 && mu_b < 1.0)) {
        throw ParameterError("binary margins must lie strictly inside (0, 1)");
      }
      const double denom =
          std::sqrt(mu_a * (1.0 - mu_a) * mu_b * (1.0 - mu_b));
      out.lo = (std::max(0.0, mu_a + mu_b - 1.0) - mu_a * mu_b) / denom;
      out.hi = (std::min(mu_a, mu_b) - mu_a * mu_b) / denom;
      return out;
    }
    case FamilyKind::PoissonLog: {
      if (!(mu_a > 0.0 && mu_b > 0.0)) {
        throw ParameterError("count margins must be positive");
      }
      // Comonotone / antimonotone couplings via a shared uniform on a
      // midpoint grid.  The grids are traversed once because the quantile
      // arguments are monotone in the grid index.
      const std::vector<double>& cdf_a = cached_poisson_cdf(mu_a);
      const std::vector<double>& cdf_b = cached_poisson_cdf(mu_b);
      double e_hi = 0.0, e_lo = 0.0;
      std::size_t ja = 0, jb_hi = 0;
      std::size_t jb_lo = cdf_b.size() - 1;
      for (int i = 0; i < kBoundsGridSize; ++i) {
        const double u = (i + 0.5) / kBoundsGridSize;
        while (ja < cdf_a.size() - 1 && cdf_a[ja] < u) ++ja;
        while (jb_hi < cdf_b.size() - 1 && cdf_b[jb_hi] < u) ++jb_hi;
        const double v = 1.0 - u;
        // Walk down to the smallest k with cdf_b[k] >= v (v decreases with i).
        while (jb_lo > 0 && cdf_b[jb_lo - 1] >= v) --jb_lo;
        e_hi += static_cast<double>(ja) * static_cast<double>(jb_hi);
        e_lo += static_cast<double>(ja) * static_cast<double>(jb_lo);
      }
      e_hi /= kBoundsGridSize;
      e_lo /= kBoundsGridSize;
      const double denom = std::sqrt(mu_a * mu_b);
      out.hi = (e_hi - mu_a * mu_b) / denom;
      out.lo = (e_lo - mu_a * mu_b) / denom;
      return out;
    }
  }
  return out;
}

double pair_correlation_from_latent(FamilyKind family, double mu_a,
                                    double mu_b, double delta) {
  switch (family) {
    case FamilyKind::GaussianIdentity:
      return delta;
    case FamilyKind::BinaryLogit:
      return binary_pair_correlation(mu_a, mu_b, delta);
    case FamilyKind::PoissonLog:
      return poisson_pair_correlation(mu_a, mu_b, delta);
  }
  return delta;
}

double solve_latent_correlation(FamilyKind family, double mu_a, double mu_b,
                                double rho) {
  if (family == FamilyKind::GaussianIdentity) {
    if (!(rho >= -1.0 && rho <= 1.0)) {
      throw RangeViolationError("normal correlation must lie in [-1, 1]");
    }
    return rho;
  }
  if (rho == 0.0) return 0.0;
  const CorrelationBounds bounds =
      feasible_correlation_bounds(family, mu_a, mu_b);
  if (rho < bounds.lo || rho > bounds.hi) {
    std::ostringstream msg;
    msg << "target correlation " << rho << " for margins (" << mu_a << ", "
        << mu_b << ") is outside the attainable range [" << bounds.lo << ", "
        << bounds.hi << "]";
    throw RangeViolationError(msg.str());
  }
  double lo = -kLatentLimit, hi = kLatentLimit;
  double flo = pair_correlation_from_latent(family, mu_a, mu_b, lo) - rho;
  double fhi = pair_correlation_from_latent(family, mu_a, mu_b, hi) - rho;
  if (flo > 0.0 || fhi < 0.0) {
    std::ostringstream msg;
    msg << "target correlation " << rho << " for margins (" << mu_a << ", "
        << mu_b
        << ") is feasible but not attainable by a Gaussian copula within "
           "|delta| <= "
        << kLatentLimit;
    throw RangeViolationError(msg.str());
  }
  for (int iter = 0; iter < 100 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f = pair_correlation_from_latent(family, mu_a, mu_b, mid) - rho;
    if (f < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double LatentSolver::latent(FamilyKind family, double mu_a, double mu_b,
                            double rho) {
  double a = mu_a, b = mu_b;
  if (a > b) std::swap(a, b);  // the forward map is symmetric in the margins
  const Key key{static_cast<int>(family), a, b, rho};
  {
    std::lock_guard<std::mutex> hold(mutex_);
    const auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const double delta = solve_latent_correlation(family, a, b, rho);
  std::lock_guard<std::mutex> hold(mutex_);
  cache_.emplace(key, delta);
  return delta;
}

Eigen::VectorXd generate_cluster(FamilyKind family, const Eigen::VectorXd& mu,
                                 const Eigen::MatrixXd& r_target,
                                 Philox4x32& rng, LatentSolver& solver,
                                 RepairLog* log) {
  const Eigen::Index n = mu.size();
  if (r_target.rows() != n || r_target.cols() != n) {
    throw ParameterError("target correlation does not match the mean vector");
  }

  Eigen::MatrixXd delta = Eigen::MatrixXd::Identity(n, n);
  if (family == FamilyKind::GaussianIdentity) {
    delta = r_target;
  } else {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = j + 1; k < n; ++k) {
        const double rho = r_target(j, k);
        delta(j, k) = delta(k, j) =
            rho == 0.0 ? 0.0 : solver.latent(family, mu[j], mu[k], rho);
      }
    }
  }
  if (n > 1 && !is_positive_definite(delta)) {
    delta = repair_to_pd(delta, log, "latent correlation");
  }

  Eigen::LLT<Eigen::MatrixXd> llt(delta);
  if (llt.info() != Eigen::Success) {
    throw GenerationError("latent correlation is not positive definite");
  }
  Eigen::VectorXd z(n);
  for (Eigen::Index t = 0; t < n; ++t) z[t] = rng.normal();
  const Eigen::VectorXd latent = llt.matrixL() * z;

  Eigen::VectorXd y(n);
  switch (family) {
    case FamilyKind::BinaryLogit:
      for (Eigen::Index t = 0; t < n; ++t) {
        y[t] = latent[t] < norm_quantile(mu[t]) ? 1.0 : 0.0;
      }
      break;
    case FamilyKind::PoissonLog:
      for (Eigen::Index t = 0; t < n; ++t) {
        const double u = norm_cdf(latent[t]);
        y[t] = poisson_quantile(cached_poisson_cdf(mu[t]), u);
      }
      break;
    case FamilyKind::GaussianIdentity:
      y = mu + latent;
      break;
  }
  return y;
}

Eigen::VectorXd ScenarioSpec::default_beta(FamilyKind family) {
  Eigen::VectorXd beta(3);
  switch (family) {
    case FamilyKind::BinaryLogit:
      beta << 1.0, 0.38, 0.35;
      break;
    case FamilyKind::PoissonLog:
      beta << 1.0, 0.20, 0.40;
      break;
    case FamilyKind::GaussianIdentity:
      beta << 1.0, 0.38, 0.35;
      break;
  }
  return beta;
}

Eigen::VectorXd ScenarioSpec::effective_beta() const {
  return beta.size() > 0 ? beta : default_beta(family);
}

std::string ScenarioSpec::cell_id() const {
  std::ostringstream id;
  id << family_name(family) << '-'
     << (balance == Balance::Balanced ? "balanced" : "unbalanced") << '-'
     << correlation_name(true_structure) << "-a" << alpha << "-N"
     << n_subjects;
  return id.str();
}

ScenarioSpec ScenarioSpec::from_cell_id(const std::string& id,
                                        std::uint64_t seed) {
  std::vector<std::string> parts;
  std::stringstream ss(id);
  std::string token;
  while (std::getline(ss, token, '-')) parts.push_back(token);
  if (parts.size() != 5 || parts[3].empty() || parts[3][0] != 'a' ||
      parts[4].empty() || parts[4][0] != 'N') {
    throw ParameterError(
        "malformed scenario id '" + id +
        "' (expected family-balance-structure-a<alpha>-N<subjects>)");
  }
  ScenarioSpec spec;
  spec.family = parse_family(parts[0]);
  if (parts[1] == "balanced") {
    spec.balance = Balance::Balanced;
  } else if (parts[1] == "unbalanced") {
    spec.balance = Balance::Unbalanced;
  } else {
    throw ParameterError("malformed scenario id '" + id +
                         "': balance must be balanced or unbalanced");
  }
  spec.true_structure = parse_correlation(parts[2]);
  if (spec.true_structure == CorrelationKind::Independence) {
    throw ParameterError("scenario id '" + id +
                         "' uses an independence truth; choose ar1, exch, or un");
  }
  try {
    spec.alpha = std::stod(parts[3].substr(1));
    spec.n_subjects = std::stoi(parts[4].substr(1));
  } catch (const std::exception&) {
    throw ParameterError("malformed scenario id '" + id + "'");
  }
  if (spec.alpha <= 0.0 || spec.alpha >= 1.0) {
    throw ParameterError("scenario correlation strength must lie in (0, 1)");
  }
  if (spec.n_subjects < 1) {
    throw ParameterError("scenario needs at least one subject");
  }
  spec.seed = seed;
  return spec;
}

Eigen::MatrixXd ScenarioSpec::true_correlation() const {
  Eigen::MatrixXd R = Eigen::MatrixXd::Identity(max_waves, max_waves);
  for (int j = 0; j < max_waves; ++j) {
    for (int k = j + 1; k < max_waves; ++k) {
      const double gap = k - j;
      double rho = 0.0;
      switch (true_structure) {
        case CorrelationKind::Ar1:
          rho = std::pow(alpha, gap);
          break;
        case CorrelationKind::Exchangeable:
          rho = alpha;
          break;
        case CorrelationKind::Unstructured:
          rho = std::pow(alpha, std::pow(gap, kUnExponent));
          break;
        case CorrelationKind::Independence:
          rho = 0.0;
          break;
      }
      R(j, k) = R(k, j) = rho;
    }
  }
  return R;
}

int draw_cluster_size(Balance balance, int max_waves, Philox4x32& rng) {
  if (balance == Balance::Balanced) return max_waves;
  const double u = rng.uniform();
  if (u < 0.15) return max_waves - 2;
  if (u < 0.30) return max_waves - 1;
  return max_waves;
}

LongitudinalDataset generate_dataset(const ScenarioSpec& spec, int replicate,
                                     LatentSolver& solver, RepairLog* log) {
  if (replicate < 0) throw ParameterError("replicate index must be >= 0");
  const Family family(spec.family);
  const Eigen::VectorXd beta = spec.effective_beta();
  if (beta.size() != 3) {
    throw ParameterError("scenario coefficient vector must have length 3");
  }
  const Eigen::MatrixXd R_full = spec.true_correlation();
  Philox4x32 rng(spec.seed, static_cast<std::uint64_t>(replicate));

  LongitudinalDataset data;
  data.p = 3;
  data.clusters.reserve(spec.n_subjects);
  for (int i = 0; i < spec.n_subjects; ++i) {
    const int n = draw_cluster_size(spec.balance, spec.max_waves, rng);
    const double x1 = rng.uniform() < 0.5 ? 1.0 : 0.0;
    Cluster c;
    c.id = std::to_string(i + 1);
    c.X.resize(n, 3);
    c.waves.resize(n);
    Eigen::VectorXd mu(n);
    for (int t = 0; t < n; ++t) {
      const double x2 = rng.uniform() < 0.5 ? 1.0 : 0.0;
      c.X(t, 0) = 1.0;
      c.X(t, 1) = x1;
      c.X(t, 2) = x2;
      c.waves[t] = t + 1;
      mu[t] = family.inv_link(beta[0] + beta[1] * x1 + beta[2] * x2);
    }
    c.y = generate_cluster(spec.family, mu, R_full.topLeftCorner(n, n), rng,
                           solver, log);
    data.clusters.push_back(std::move(c));
  }
  data.rebuild_wave_grid();
  return data;
}

std::vector<ScenarioSpec> standard_scenarios(std::uint64_t seed) {
  std::vector<ScenarioSpec> out;
  const FamilyKind families[] = {FamilyKind::BinaryLogit,
                                 FamilyKind::PoissonLog};
  const Balance balances[] = {Balance::Balanced, Balance::Unbalanced};
  const double alphas[] = {0.2, 0.4};
  const CorrelationKind structures[] = {CorrelationKind::Ar1,
                                        CorrelationKind::Exchangeable,
                                        CorrelationKind::Unstructured};
  const int sizes[] = {50, 100};
  for (FamilyKind family : families) {
    for (Balance balance : balances) {
      for (double alpha : alphas) {
        for (CorrelationKind structure : structures) {
          for (int n : sizes) {
            ScenarioSpec spec;
            spec.family = family;
            spec.balance = balance;
            spec.alpha = alpha;
            spec.true_structure = structure;
            spec.n_subjects = n;
            spec.seed = seed;
            out.push_back(std::move(spec));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace geepress
