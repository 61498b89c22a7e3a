#include "geepress/gee.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "geepress/errors.hpp"

namespace geepress {

namespace {

constexpr double kEeNormScale = 1e-6;  // EE norm must drop below this * (1+|beta|)
constexpr double kPhiFloor = 1e-12;
constexpr int kMaxRepairNotes = 12;

bool unit_spaced(const std::vector<std::vector<double>>& waves) {
  for (const auto& w : waves) {
    for (std::size_t t = 1; t < w.size(); ++t) {
      if (w[t] - w[t - 1] != 1.0) return false;
    }
  }
  return true;
}

/// Minimizes f over [a, b] by golden-section search.
template <typename F>
double golden_section(F f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

int adjacent_pair_count(const LongitudinalDataset& data) {
  int count = 0;
  for (const auto& c : data.clusters) count += std::max(0, c.size() - 1);
  return count;
}

long all_pair_count(const LongitudinalDataset& data) {
  long count = 0;
  for (const auto& c : data.clusters) {
    count += static_cast<long>(c.size()) * (c.size() - 1) / 2;
  }
  return count;
}

}  // namespace

namespace detail {

void check_structure_feasible(const LongitudinalDataset& data,
                              CorrelationKind kind) {
  const int p = data.p;
  switch (kind) {
    case CorrelationKind::Independence:
      return;
    case CorrelationKind::Ar1: {
      const int adj = adjacent_pair_count(data);
      std::vector<std::vector<double>> waves;
      for (const auto& c : data.clusters) waves.push_back(c.waves);
      if (unit_spaced(waves)) {
        if (adj <= p) {
          throw StructureInfeasibleError(
              "ar1: too few adjacent residual pairs to estimate the lag-1 "
              "correlation after the degree-of-freedom correction");
        }
      } else if (adj < 1) {
        throw StructureInfeasibleError(
            "ar1: no adjacent residual pairs available");
      }
      return;
    }
    case CorrelationKind::Exchangeable: {
      if (all_pair_count(data) <= p) {
        throw StructureInfeasibleError(
            "exch: too few within-cluster residual pairs to estimate the "
            "common correlation after the degree-of-freedom correction");
      }
      return;
    }
    case CorrelationKind::Unstructured: {
      const Eigen::MatrixXi counts = wave_pair_counts(data);
      const int T = static_cast<int>(data.wave_grid.size());
      for (int s = 0; s < T; ++s) {
        for (int t = s + 1; t < T; ++t) {
          if (counts(s, t) <= p) {
            std::ostringstream msg;
            msg << "un: wave pair (" << data.wave_grid[s] << ", "
                << data.wave_grid[t] << ") is observed by " << counts(s, t)
                << " clusters, need more than " << p;
            throw StructureInfeasibleError(msg.str());
          }
        }
      }
      return;
    }
  }
}

}  // namespace detail

double estimate_phi(const std::vector<Eigen::VectorXd>& pearson,
                    int total_obs, int p, PhiMode mode) {
  if (mode == PhiMode::FixedOne) return 1.0;
  if (total_obs <= p) {
    throw ParameterError("dispersion estimate needs more observations than "
                         "coefficients");
  }
  double ss = 0.0;
  for (const auto& r : pearson) ss += r.squaredNorm();
  return ss / (total_obs - p);
}

WorkingCorrelation estimate_alpha(
    CorrelationKind kind, const std::vector<Eigen::VectorXd>& pearson,
    const std::vector<std::vector<double>>& waves,
    const std::vector<double>& wave_grid, double phi, int p,
    const FitOptions& options, RepairLog* log) {
  const double lo = options.alpha_min;
  const double hi = options.alpha_max;
  switch (kind) {
    case CorrelationKind::Independence:
      return WorkingCorrelation::independence();

    case CorrelationKind::Ar1: {
      int adj = 0;
      for (const auto& w : waves) adj += std::max<int>(0, w.size() - 1);
      if (unit_spaced(waves)) {
        if (adj <= p) {
          throw StructureInfeasibleError(
              "ar1: too few adjacent residual pairs");
        }
        double num = 0.0;
        for (std::size_t i = 0; i < pearson.size(); ++i) {
          for (Eigen::Index t = 0; t + 1 < pearson[i].size(); ++t) {
            num += pearson[i][t] * pearson[i][t + 1];
          }
        }
        const double alpha = num / (phi * (adj - p));
        return WorkingCorrelation::ar1(std::clamp(alpha, lo, hi));
      }
      if (adj < 1) {
        throw StructureInfeasibleError("ar1: no adjacent residual pairs");
      }
      // Non-unit wave spacing: least-squares match of adjacent residual
      // products to alpha^{separation}, solved by golden section on [0, hi].
      auto objective = [&](double alpha) {
        double ss = 0.0;
        for (std::size_t i = 0; i < pearson.size(); ++i) {
          for (std::size_t t = 0; t + 1 < waves[i].size(); ++t) {
            const double gap = waves[i][t + 1] - waves[i][t];
            const double diff =
                pearson[i][t] * pearson[i][t + 1] / phi - std::pow(alpha, gap);
            ss += diff * diff;
          }
        }
        return ss;
      };
      const double alpha = golden_section(objective, 0.0, hi, 1e-8);
      return WorkingCorrelation::ar1(alpha);
    }

    case CorrelationKind::Exchangeable: {
      long pairs = 0;
      double num = 0.0;
      for (const auto& r : pearson) {
        const Eigen::Index n = r.size();
        pairs += static_cast<long>(n) * (n - 1) / 2;
        for (Eigen::Index s = 0; s < n; ++s) {
          for (Eigen::Index t = s + 1; t < n; ++t) num += r[s] * r[t];
        }
      }
      if (pairs <= p) {
        throw StructureInfeasibleError(
            "exch: too few within-cluster residual pairs");
      }
      const double alpha = num / (phi * (static_cast<double>(pairs) - p));
      return WorkingCorrelation::exchangeable(std::clamp(alpha, lo, hi));
    }

    case CorrelationKind::Unstructured: {
      const int T = static_cast<int>(wave_grid.size());
      Eigen::MatrixXd num = Eigen::MatrixXd::Zero(T, T);
      Eigen::MatrixXi count = Eigen::MatrixXi::Zero(T, T);
      for (std::size_t i = 0; i < pearson.size(); ++i) {
        std::vector<int> idx(waves[i].size());
        for (std::size_t j = 0; j < waves[i].size(); ++j) {
          idx[j] = wave_index(wave_grid, waves[i][j]);
        }
        for (std::size_t j = 0; j < idx.size(); ++j) {
          for (std::size_t k = j + 1; k < idx.size(); ++k) {
            const int a = std::min(idx[j], idx[k]);
            const int b = std::max(idx[j], idx[k]);
            num(a, b) += pearson[i][j] * pearson[i][k];
            count(a, b) += 1;
          }
        }
      }
      Eigen::MatrixXd R = Eigen::MatrixXd::Identity(T, T);
      for (int s = 0; s < T; ++s) {
        for (int t = s + 1; t < T; ++t) {
          if (count(s, t) <= p) {
            std::ostringstream msg;
            msg << "un: wave pair (" << wave_grid[s] << ", " << wave_grid[t]
                << ") has " << count(s, t) << " residual pairs, need more than "
                << p;
            throw StructureInfeasibleError(msg.str());
          }
          const double a = num(s, t) / (phi * (count(s, t) - p));
          R(s, t) = R(t, s) = std::clamp(a, lo, hi);
        }
      }
      if (T > 1 && !is_positive_definite(R)) {
        R = repair_to_pd(R, log, "unstructured correlation estimate");
      }
      return WorkingCorrelation::unstructured(std::move(R), wave_grid);
    }
  }
  return WorkingCorrelation::independence();
}

namespace {

struct MeanState {
  std::vector<MeanResponse> means;
  std::vector<Eigen::VectorXd> resid;
  std::vector<Eigen::VectorXd> pearson;
};

MeanState eval_means(const LongitudinalDataset& data, const Family& family,
                     const Eigen::VectorXd& beta,
                     const std::vector<Eigen::VectorXd>* offsets) {
  MeanState st;
  const std::size_t n = data.clusters.size();
  st.means.resize(n);
  st.resid.resize(n);
  st.pearson.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Cluster& c = data.clusters[i];
    st.means[i] = offsets == nullptr
                      ? mean_response(family, c.X, beta)
                      : mean_response(family, c.X, beta, (*offsets)[i]);
    st.resid[i] = c.y - st.means[i].mu;
    st.pearson[i] = st.resid[i].cwiseQuotient(st.means[i].var.cwiseSqrt());
  }
  return st;
}

Eigen::MatrixXd working_covariance(const MeanResponse& m,
                                   const Eigen::MatrixXd& R, double phi) {
  const Eigen::VectorXd sd = m.var.cwiseSqrt();
  return phi * (sd.asDiagonal() * R * sd.asDiagonal());
}

}  // namespace

namespace detail {

GeeFit fit_with_offset(const LongitudinalDataset& data, const Family& family,
                       CorrelationKind kind, const FitOptions& options,
                       const std::vector<Eigen::VectorXd>* offsets) {
  data.validate(family);
  check_structure_feasible(data, kind);
  const int p = data.p;
  const std::size_t nclus = data.clusters.size();
  if (offsets != nullptr && offsets->size() != nclus) {
    throw ParameterError("offset list does not match the number of clusters");
  }

  GeeFit out;
  out.family = family.kind();
  out.total_obs = data.total_obs();

  // Starting values: caller-supplied, else the independence fit (itself
  // started at zero).
  Eigen::VectorXd beta;
  if (options.initial_beta.has_value()) {
    if (options.initial_beta->size() != p) {
      throw ParameterError("initial coefficient vector has the wrong length");
    }
    beta = *options.initial_beta;
  } else if (kind == CorrelationKind::Independence) {
    beta = Eigen::VectorXd::Zero(p);
  } else {
    FitOptions indep_opt = options;
    indep_opt.initial_beta.reset();
    beta = fit_with_offset(data, family, CorrelationKind::Independence,
                           indep_opt, offsets)
               .beta;
  }

  WorkingCorrelation wc;
  switch (kind) {
    case CorrelationKind::Independence:
      wc = WorkingCorrelation::independence();
      break;
    case CorrelationKind::Ar1:
      wc = WorkingCorrelation::ar1(0.0);
      break;
    case CorrelationKind::Exchangeable:
      wc = WorkingCorrelation::exchangeable(0.0);
      break;
    case CorrelationKind::Unstructured:
      wc = WorkingCorrelation::unstructured(
          Eigen::MatrixXd::Identity(data.wave_grid.size(),
                                    data.wave_grid.size()),
          data.wave_grid);
      break;
  }
  double phi = 1.0;

  std::vector<std::vector<double>> waves(nclus);
  for (std::size_t i = 0; i < nclus; ++i) waves[i] = data.clusters[i].waves;

  RepairLog repair_log;
  MeanState st = eval_means(data, family, beta, offsets);
  std::vector<Eigen::MatrixXd> V(nclus);

  Eigen::MatrixXd M(p, p);
  Eigen::VectorXd U(p);
  double last_step = std::numeric_limits<double>::infinity();
  bool converged = false;
  int iterations = 0;

  for (int iter = 0;; ++iter) {
    // Working covariances and estimating equations at the current state.
    M.setZero();
    U.setZero();
    for (std::size_t i = 0; i < nclus; ++i) {
      const Eigen::MatrixXd R =
          build_correlation(wc, waves[i], &repair_log,
                            "cluster '" + data.clusters[i].id + "'");
      V[i] = working_covariance(st.means[i], R, phi);
      Eigen::LLT<Eigen::MatrixXd> llt(V[i]);
      if (llt.info() != Eigen::Success) {
        throw RankDeficiencyError("working covariance of cluster '" +
                                  data.clusters[i].id +
                                  "' is not positive definite");
      }
      M.noalias() += st.means[i].D.transpose() * llt.solve(st.means[i].D);
      U.noalias() += st.means[i].D.transpose() * llt.solve(st.resid[i]);
    }
    out.ee_norm = U.norm();

    if (last_step <= options.tol &&
        out.ee_norm <= kEeNormScale * (1.0 + beta.norm())) {
      converged = true;
      break;
    }
    if (iter >= options.max_iter) break;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    if (!lu.isInvertible()) {
      throw RankDeficiencyError(
          "scoring matrix is singular; check for collinear covariates");
    }
    const Eigen::VectorXd delta = lu.solve(U);
    if (!delta.allFinite()) {
      out.notes.push_back("non-finite coefficient step; stopping early");
      break;
    }
    beta += delta;
    last_step = delta.cwiseAbs().maxCoeff();
    ++iterations;

    // Moment updates at the new coefficients: residuals, then dispersion,
    // then correlation.
    st = eval_means(data, family, beta, offsets);
    phi = estimate_phi(st.pearson, out.total_obs, p, options.phi_mode);
    if (phi < kPhiFloor) {
      phi = kPhiFloor;
      out.notes.push_back("dispersion estimate floored at 1e-12");
    }
    if (kind != CorrelationKind::Independence) {
      wc = estimate_alpha(kind, st.pearson, waves, data.wave_grid, phi, p,
                          options, &repair_log);
    }
  }

  out.beta = beta;
  out.correlation = wc;
  if (out.correlation.wave_grid.empty()) {
    out.correlation.wave_grid = data.wave_grid;
  }
  out.phi = phi;
  out.iterations = iterations;
  out.converged = converged;
  out.max_step = last_step;

  // Final caches at the last state (V already matches st and wc).
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  if (!lu.isInvertible()) {
    throw RankDeficiencyError(
        "scoring matrix is singular; check for collinear covariates");
  }
  const Eigen::MatrixXd minv = lu.inverse();
  out.model_cov = 0.5 * (minv + minv.transpose());

  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(p, p);
  out.cluster.resize(nclus);
  out.quasi_lik = 0.0;
  for (std::size_t i = 0; i < nclus; ++i) {
    ClusterCache& cc = out.cluster[i];
    cc.mu = st.means[i].mu;
    cc.resid = st.resid[i];
    cc.var = st.means[i].var;
    cc.link_deriv = st.means[i].link_deriv;
    cc.D = st.means[i].D;
    cc.V = V[i];
    Eigen::LLT<Eigen::MatrixXd> llt(V[i]);
    const Eigen::MatrixXd vinv =
        llt.solve(Eigen::MatrixXd::Identity(cc.V.rows(), cc.V.cols()));
    cc.H = cc.D * out.model_cov * cc.D.transpose() * vinv;
    const Eigen::VectorXd u = cc.D.transpose() * (vinv * cc.resid);
    J.noalias() += u * u.transpose();
    out.quasi_lik +=
        quasi_likelihood(family, data.clusters[i].y, cc.mu, 1.0);
  }
  out.quasi_lik *= phi;
  const Eigen::MatrixXd sw = out.model_cov * J * out.model_cov;
  out.sandwich_cov = 0.5 * (sw + sw.transpose());

  if (repair_log.repairs > 0) {
    const int show =
        std::min<int>(kMaxRepairNotes, static_cast<int>(repair_log.notes.size()));
    for (int k = 0; k < show; ++k) out.notes.push_back(repair_log.notes[k]);
    if (repair_log.repairs > show) {
      out.notes.push_back("(" + std::to_string(repair_log.repairs - show) +
                          " more correlation repairs suppressed)");
    }
  }
  return out;
}

}  // namespace detail

GeeFit fit(const LongitudinalDataset& data, const Family& family,
           CorrelationKind kind, const FitOptions& options) {
  return detail::fit_with_offset(data, family, kind, options, nullptr);
}

Eigen::MatrixXd sandwich(const GeeFit& fit) {
  const int p = fit.p();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(p, p);
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(p, p);
  for (const auto& cc : fit.cluster) {
    Eigen::LLT<Eigen::MatrixXd> llt(cc.V);
    M.noalias() += cc.D.transpose() * llt.solve(cc.D);
    const Eigen::VectorXd u = cc.D.transpose() * llt.solve(cc.resid);
    J.noalias() += u * u.transpose();
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  if (!lu.isInvertible()) {
    throw RankDeficiencyError("scoring matrix is singular");
  }
  const Eigen::MatrixXd minv = lu.inverse();
  const Eigen::MatrixXd sw = minv * J * minv;
  return 0.5 * (sw + sw.transpose());
}

const Eigen::MatrixXd& leverage(const GeeFit& fit, int cluster_index) {
  if (cluster_index < 0 || cluster_index >= fit.n_clusters()) {
    throw ParameterError("cluster index out of range");
  }
  return fit.cluster[cluster_index].H;
}

Eigen::VectorXd one_step_deletion(const GeeFit& fit, int cluster_index) {
  if (cluster_index < 0 || cluster_index >= fit.n_clusters()) {
    throw ParameterError("cluster index out of range");
  }
  const ClusterCache& cc = fit.cluster[cluster_index];
  const Eigen::Index n = cc.resid.size();
  const Eigen::MatrixXd ImH = Eigen::MatrixXd::Identity(n, n) - cc.H;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(ImH);
  lu.setThreshold(kDeletionPivotThreshold);
  if (!lu.isInvertible()) {
    throw DeletionSingularError(
        "(I - H) is singular for cluster index " +
        std::to_string(cluster_index) +
        "; the cluster determines the fit completely");
  }
  const Eigen::VectorXd adj = lu.solve(cc.resid);
  Eigen::LLT<Eigen::MatrixXd> llt(cc.V);
  return fit.model_cov * (cc.D.transpose() * llt.solve(adj));
}

GeeFit exact_deletion(const LongitudinalDataset& data, const Family& family,
                      CorrelationKind kind, const FitOptions& options,
                      int cluster_index) {
  if (cluster_index < 0 || cluster_index >= data.n_clusters()) {
    throw ParameterError("cluster index out of range");
  }
  LongitudinalDataset reduced;
  reduced.p = data.p;
  reduced.clusters.reserve(data.clusters.size() - 1);
  for (int i = 0; i < data.n_clusters(); ++i) {
    if (i != cluster_index) reduced.clusters.push_back(data.clusters[i]);
  }
  reduced.rebuild_wave_grid();
  return fit(reduced, family, kind, options);
}

}  // namespace geepress
