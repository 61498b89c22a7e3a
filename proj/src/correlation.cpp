#include "geepress/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "geepress/errors.hpp"

namespace geepress {

namespace {

constexpr double kEigenFloor = 1e-6;

bool is_integer(double x) { return x == std::floor(x); }

}  // namespace

std::string correlation_name(CorrelationKind kind) {
  switch (kind) {
    case CorrelationKind::Independence: return "indep";
    case CorrelationKind::Ar1: return "ar1";
    case CorrelationKind::Exchangeable: return "exch";
    case CorrelationKind::Unstructured: return "un";
  }
  return "unknown";
}

CorrelationKind parse_correlation(const std::string& name) {
  if (name == "indep" || name == "independence" || name == "ind") {
    return CorrelationKind::Independence;
  }
  if (name == "ar1" || name == "ar-1" || name == "ar") {
    return CorrelationKind::Ar1;
  }
  if (name == "exch" || name == "exchangeable" || name == "cs") {
    return CorrelationKind::Exchangeable;
  }
  if (name == "un" || name == "unstructured") {
    return CorrelationKind::Unstructured;
  }
  throw ParameterError("unknown correlation structure '" + name +
                       "' (expected indep, ar1, exch, or un)");
}

int correlation_complexity(CorrelationKind kind) {
  switch (kind) {
    case CorrelationKind::Independence: return 0;
    case CorrelationKind::Ar1: return 1;
    case CorrelationKind::Exchangeable: return 2;
    case CorrelationKind::Unstructured: return 3;
  }
  return 4;
}

int correlation_param_count(CorrelationKind kind, int n_waves) {
  switch (kind) {
    case CorrelationKind::Independence: return 0;
    case CorrelationKind::Ar1: return 1;
    case CorrelationKind::Exchangeable: return 1;
    case CorrelationKind::Unstructured: return n_waves * (n_waves - 1) / 2;
  }
  return 0;
}

WorkingCorrelation WorkingCorrelation::independence() {
  return WorkingCorrelation{};
}

WorkingCorrelation WorkingCorrelation::ar1(double alpha) {
  WorkingCorrelation wc;
  wc.kind = CorrelationKind::Ar1;
  wc.alpha = alpha;
  return wc;
}

WorkingCorrelation WorkingCorrelation::exchangeable(double alpha) {
  WorkingCorrelation wc;
  wc.kind = CorrelationKind::Exchangeable;
  wc.alpha = alpha;
  return wc;
}

WorkingCorrelation WorkingCorrelation::unstructured(
    Eigen::MatrixXd matrix, std::vector<double> wave_grid) {
  WorkingCorrelation wc;
  wc.kind = CorrelationKind::Unstructured;
  wc.matrix = std::move(matrix);
  wc.wave_grid = std::move(wave_grid);
  return wc;
}

int wave_index(const std::vector<double>& grid, double wave) {
  const auto it = std::find(grid.begin(), grid.end(), wave);
  if (it == grid.end()) {
    std::ostringstream msg;
    msg << "wave " << wave << " is not on the measurement grid";
    throw ParameterError(msg.str());
  }
  return static_cast<int>(it - grid.begin());
}

bool is_positive_definite(const Eigen::MatrixXd& R) {
  Eigen::LLT<Eigen::MatrixXd> llt(R);
  return llt.info() == Eigen::Success;
}

Eigen::MatrixXd repair_to_pd(const Eigen::MatrixXd& R, RepairLog* log,
                             const std::string& context) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(R);
  if (es.info() != Eigen::Success) {
    throw GenerationError("eigendecomposition failed while repairing " +
                          context);
  }
  Eigen::VectorXd evals = es.eigenvalues();
  const double min_before = evals.minCoeff();
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    evals[k] = std::max(evals[k], kEigenFloor);
  }
  Eigen::MatrixXd fixed =
      es.eigenvectors() * evals.asDiagonal() * es.eigenvectors().transpose();
  // Restore a unit diagonal so the result is still a correlation matrix.
  Eigen::VectorXd d = fixed.diagonal().cwiseSqrt().cwiseInverse();
  fixed = d.asDiagonal() * fixed * d.asDiagonal();
  fixed = ((fixed + fixed.transpose()) * 0.5).eval();
  fixed.diagonal().setOnes();
  if (!is_positive_definite(fixed)) {
    throw GenerationError("positive-definiteness repair failed for " + context);
  }
  if (log != nullptr) {
    std::ostringstream note;
    note << "repaired non-positive-definite correlation"
         << (context.empty() ? "" : " (" + context + ")")
         << ": min eigenvalue " << min_before << " clipped to " << kEigenFloor;
    log->add(note.str());
  }
  return fixed;
}

Eigen::MatrixXd build_correlation(const WorkingCorrelation& wc,
                                  const std::vector<double>& waves,
                                  RepairLog* log, const std::string& context) {
  const int n = static_cast<int>(waves.size());
  Eigen::MatrixXd R = Eigen::MatrixXd::Identity(n, n);
  switch (wc.kind) {
    case CorrelationKind::Independence:
      return R;
    case CorrelationKind::Ar1: {
      if (!(wc.alpha > -1.0 && wc.alpha < 1.0)) {
        throw ParameterError("ar1 correlation parameter must lie in (-1, 1)");
      }
      for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          const double gap = std::abs(waves[k] - waves[j]);
          if (wc.alpha < 0.0 && !is_integer(gap)) {
            throw ParameterError(
                "negative ar1 parameter requires integer wave separations");
          }
          R(j, k) = R(k, j) = std::pow(wc.alpha, gap);
        }
      }
      break;
    }
    case CorrelationKind::Exchangeable: {
      if (!(wc.alpha > -1.0 && wc.alpha < 1.0)) {
        throw ParameterError(
            "exchangeable correlation parameter must lie in (-1, 1)");
      }
      for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          R(j, k) = R(k, j) = wc.alpha;
        }
      }
      break;
    }
    case CorrelationKind::Unstructured: {
      if (wc.matrix.rows() != static_cast<Eigen::Index>(wc.wave_grid.size())) {
        throw ParameterError(
            "unstructured correlation matrix does not match its wave grid");
      }
      std::vector<int> idx(waves.size());
      for (std::size_t j = 0; j < waves.size(); ++j) {
        idx[j] = wave_index(wc.wave_grid, waves[j]);
      }
      for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          R(j, k) = R(k, j) = wc.matrix(idx[j], idx[k]);
        }
      }
      break;
    }
  }
  if (n > 1 && !is_positive_definite(R)) {
    R = repair_to_pd(R, log, context.empty() ? "working correlation" : context);
  }
  return R;
}

}  // namespace geepress
