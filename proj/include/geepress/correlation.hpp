#ifndef GEEPRESS_CORRELATION_HPP
#define GEEPRESS_CORRELATION_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace geepress {

enum class CorrelationKind {
  Independence,
  Ar1,
  Exchangeable,
  Unstructured,
};

std::string correlation_name(CorrelationKind kind);
CorrelationKind parse_correlation(const std::string& name);  // throws ParameterError

/// Complexity order used to break ties in model selection: structures with
/// fewer correlation parameters are preferred.
int correlation_complexity(CorrelationKind kind);

/// Number of free correlation parameters for a structure over a grid of
/// n_waves measurement occasions.
int correlation_param_count(CorrelationKind kind, int n_waves);

/// Collects human-readable notes about positive-definiteness repairs so
/// callers can surface them instead of silently altering matrices.
struct RepairLog {
  std::vector<std::string> notes;
  int repairs = 0;
  void add(const std::string& note) {
    notes.push_back(note);
    ++repairs;
  }
};

/// A fitted or assumed working correlation model.  AR(1) and exchangeable
/// structures carry a single parameter alpha; the unstructured form carries
/// one entry per pair of waves on the common grid.
struct WorkingCorrelation {
  CorrelationKind kind = CorrelationKind::Independence;
  double alpha = 0.0;                 // AR(1)/exchangeable parameter
  Eigen::MatrixXd matrix;             // unstructured: full grid correlation
  std::vector<double> wave_grid;      // ordered distinct measurement times

  static WorkingCorrelation independence();
  static WorkingCorrelation ar1(double alpha);
  static WorkingCorrelation exchangeable(double alpha);
  static WorkingCorrelation unstructured(Eigen::MatrixXd matrix,
                                         std::vector<double> wave_grid);
};

/// Index of a wave value on the grid; throws ParameterError when the value
/// is not a grid member (exact comparison: grids are built from the same
/// parsed/generated doubles as the cluster waves).
int wave_index(const std::vector<double>& grid, double wave);

/// Builds the n_i x n_i working correlation matrix for a cluster observed
/// at the given waves.  AR(1) entries decay as alpha^{|t_j - t_k|} in the
/// actual (possibly non-unit) time separation; exchangeable entries are
/// constant; unstructured entries are looked up on the wave grid.  The
/// result is checked for positive definiteness and repaired via repair_to_pd
/// when necessary (each repair is logged).
Eigen::MatrixXd build_correlation(const WorkingCorrelation& wc,
                                  const std::vector<double>& waves,
                                  RepairLog* log = nullptr,
                                  const std::string& context = std::string());

/// Clips eigenvalues below 1e-6 and rescales to a unit diagonal, restoring
/// positive definiteness while perturbing the matrix as little as possible.
/// Throws GenerationError if the result still fails a Cholesky check.
Eigen::MatrixXd repair_to_pd(const Eigen::MatrixXd& R, RepairLog* log,
                             const std::string& context);

/// True when R admits a Cholesky factorization (strictly positive definite
/// up to LLT's tolerance).
bool is_positive_definite(const Eigen::MatrixXd& R);

}  // namespace geepress

#endif  // GEEPRESS_CORRELATION_HPP
