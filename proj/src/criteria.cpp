#include "geepress/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "geepress/errors.hpp"

namespace geepress {

namespace {

void require_converged(const GeeFit& fit) {
  if (!fit.converged) {
    throw ConvergenceError(
        "criterion requested for a fit that did not converge (working "
        "structure '" +
        correlation_name(fit.correlation.kind) + "')");
  }
}

/// M = sum_i D_i' V_i^-1 D_i at the fitted values.
Eigen::MatrixXd scoring_matrix(const GeeFit& fit) {
  const int p = fit.p();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(p, p);
  for (const auto& cc : fit.cluster) {
    Eigen::LLT<Eigen::MatrixXd> llt(cc.V);
    M.noalias() += cc.D.transpose() * llt.solve(cc.D);
  }
  return M;
}

/// Independence-weighted variant: sum_i D_i' A_i^-1 D_i (no dispersion).
Eigen::MatrixXd independence_scoring_matrix(const GeeFit& fit) {
  const int p = fit.p();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(p, p);
  for (const auto& cc : fit.cluster) {
    M.noalias() +=
        cc.D.transpose() * cc.var.cwiseInverse().asDiagonal() * cc.D;
  }
  return M;
}

}  // namespace

std::string criterion_name(Criterion c) {
  switch (c) {
    case Criterion::Cic: return "CIC";
    case Criterion::Dbar: return "DBAR";
    case Criterion::Gpc: return "GPC";
    case Criterion::Qic: return "QIC";
    case Criterion::Rj1: return "RJ1";
    case Criterion::Rj2: return "RJ2";
    case Criterion::Sc: return "SC";
  }
  return "unknown";
}

Criterion parse_criterion(const std::string& name) {
  std::string up = name;
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char ch) { return std::toupper(ch); });
  for (Criterion c : kAllCriteria) {
    if (up == criterion_name(c)) return c;
  }
  throw ParameterError("unknown criterion '" + name +
                       "' (expected CIC, DBAR, GPC, QIC, RJ1, RJ2, or SC)");
}

double CriterionValues::raw(Criterion c) const {
  switch (c) {
    case Criterion::Cic: return cic;
    case Criterion::Dbar: return dbar;
    case Criterion::Gpc: return gpc;
    case Criterion::Qic: return qic;
    case Criterion::Rj1: return rj1;
    case Criterion::Rj2: return rj2;
    case Criterion::Sc: return sc;
  }
  return 0.0;
}

double cic_from_matrices(const Eigen::MatrixXd& m_indep,
                         const Eigen::MatrixXd& sigma) {
  return (m_indep * sigma).trace();
}

RjValues rj_from_matrices(const Eigen::MatrixXd& m, const Eigen::MatrixXd& sigma,
                          int p) {
  const Eigen::MatrixXd q = m * sigma;
  RjValues out;
  out.rj1 = q.trace() / p;
  out.rj2 = (q * q).trace() / p;
  out.dbar = out.rj2 - 2.0 * out.rj1 + 1.0;
  return out;
}

double cic(const GeeFit& fit) {
  require_converged(fit);
  return cic_from_matrices(independence_scoring_matrix(fit), fit.sandwich_cov);
}

double qic(const GeeFit& fit) {
  require_converged(fit);
  return -2.0 * fit.quasi_lik + 2.0 * cic(fit);
}

RjValues rj(const GeeFit& fit) {
  require_converged(fit);
  return rj_from_matrices(scoring_matrix(fit), fit.sandwich_cov, fit.p());
}

double sc(const GeeFit& fit) {
  require_converged(fit);
  double total = 0.0;
  for (const auto& cc : fit.cluster) {
    Eigen::LLT<Eigen::MatrixXd> llt(cc.V);
    total += cc.resid.dot(llt.solve(cc.resid));
  }
  return total;
}

double gpc(const GeeFit& fit) {
  require_converged(fit);
  double total = 0.0;
  for (std::size_t i = 0; i < fit.cluster.size(); ++i) {
    const auto& cc = fit.cluster[i];
    const Eigen::Index n = cc.resid.size();
    const Eigen::MatrixXd ImH = Eigen::MatrixXd::Identity(n, n) - cc.H;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(ImH);
    lu.setThreshold(kDeletionPivotThreshold);
    if (!lu.isInvertible()) {
      throw DeletionSingularError(
          "(I - H) is singular for cluster index " + std::to_string(i) +
          " while computing the predictive criterion");
    }
    const Eigen::VectorXd a = lu.solve(cc.resid);
    Eigen::LLT<Eigen::MatrixXd> llt(cc.V);
    total += a.dot(llt.solve(a));
  }
  return total;
}

CriterionValues all_criteria(const GeeFit& fit) {
  require_converged(fit);
  CriterionValues v;
  v.cic = cic(fit);
  v.qic = -2.0 * fit.quasi_lik + 2.0 * v.cic;
  const RjValues r = rj(fit);
  v.rj1 = r.rj1;
  v.rj2 = r.rj2;
  v.dbar = r.dbar;
  v.sc = sc(fit);
  v.gpc = gpc(fit);
  return v;
}

double selection_value(const CriterionValues& values, Criterion c) {
  switch (c) {
    case Criterion::Rj1: return std::abs(values.rj1 - 1.0);
    case Criterion::Rj2: return std::abs(values.rj2 - 1.0);
    case Criterion::Dbar: return std::abs(values.dbar);
    default: return values.raw(c);
  }
}

std::array<int, 7> compute_winners(const std::vector<Candidate>& candidates) {
  std::array<int, 7> winner;
  winner.fill(-1);
  for (std::size_t ci = 0; ci < kAllCriteria.size(); ++ci) {
    const Criterion crit = kAllCriteria[ci];
    int best = -1;
    double best_value = 0.0;
    int best_complexity = 0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (!candidates[k].usable) continue;
      const double v = selection_value(candidates[k].values, crit);
      const int cx = correlation_complexity(candidates[k].kind);
      if (best < 0 || v < best_value ||
          (v == best_value && cx < best_complexity)) {
        best = static_cast<int>(k);
        best_value = v;
        best_complexity = cx;
      }
    }
    winner[ci] = best;
  }
  return winner;
}

CorrelationKind SelectionReport::winner_kind(Criterion c) const {
  const auto it = std::find(kAllCriteria.begin(), kAllCriteria.end(), c);
  const int idx = winner[static_cast<std::size_t>(it - kAllCriteria.begin())];
  if (idx < 0) {
    throw ConvergenceError("criterion " + criterion_name(c) +
                           " has no usable candidate");
  }
  return candidates[idx].kind;
}

SelectionReport select(const LongitudinalDataset& data, const Family& family,
                       const std::vector<CorrelationKind>& kinds,
                       const FitOptions& options) {
  if (kinds.empty()) {
    throw ParameterError("selection requires at least one candidate structure");
  }
  SelectionReport report;
  report.candidates.reserve(kinds.size());
  for (CorrelationKind kind : kinds) {
    Candidate cand;
    cand.kind = kind;
    try {
      cand.fit = fit(data, family, kind, options);
      if (cand.fit.converged) {
        cand.values = all_criteria(cand.fit);
        cand.usable = true;
      } else {
        cand.note = "fit did not converge within the iteration limit";
      }
    } catch (const StructureInfeasibleError& e) {
      cand.note = e.what();
    } catch (const ConvergenceError& e) {
      cand.note = e.what();
    } catch (const DeletionSingularError& e) {
      cand.note = e.what();
    }
    if (!cand.usable) ++report.n_excluded;
    report.candidates.push_back(std::move(cand));
  }
  bool any = false;
  for (const auto& c : report.candidates) any = any || c.usable;
  if (!any) {
    throw ConvergenceError(
        "no candidate working structure produced a converged fit");
  }
  report.winner = compute_winners(report.candidates);
  return report;
}

}  // namespace geepress
