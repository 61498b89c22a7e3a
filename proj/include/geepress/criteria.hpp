#ifndef GEEPRESS_CRITERIA_HPP
#define GEEPRESS_CRITERIA_HPP

#include <array>
#include <string>
#include <vector>

#include "geepress/gee.hpp"

namespace geepress {

/// Working-correlation selection criteria.  The enum order matches the row
/// order used in reports.
enum class Criterion { Cic, Dbar, Gpc, Qic, Rj1, Rj2, Sc };

inline constexpr std::array<Criterion, 7> kAllCriteria = {
    Criterion::Cic, Criterion::Dbar, Criterion::Gpc, Criterion::Qic,
    Criterion::Rj1, Criterion::Rj2, Criterion::Sc};

std::string criterion_name(Criterion c);
Criterion parse_criterion(const std::string& name);  // throws ParameterError

/// All seven criterion values for one fitted candidate.
struct CriterionValues {
  double qic = 0, cic = 0, rj1 = 0, rj2 = 0, dbar = 0, sc = 0, gpc = 0;
  double raw(Criterion c) const;
};

/// Every criterion accessor below throws ConvergenceError when handed an
/// unconverged fit: criterion values at a non-solution are meaningless.
double qic(const GeeFit& fit);
double cic(const GeeFit& fit);

struct RjValues {
  double rj1 = 0, rj2 = 0, dbar = 0;
};
RjValues rj(const GeeFit& fit);

double sc(const GeeFit& fit);   // sum_i e_i' V_i^-1 e_i
double gpc(const GeeFit& fit);  // sum_i a_i' V_i^-1 a_i, a_i = (I-H_i)^-1 e_i

CriterionValues all_criteria(const GeeFit& fit);

/// Matrix-level forms, exposed so the trace algebra can be exercised with
/// synthetic inputs: cic = tr(m_indep * sigma); the RJ statistics come from
/// Q = m * sigma.
double cic_from_matrices(const Eigen::MatrixXd& m_indep,
                         const Eigen::MatrixXd& sigma);
RjValues rj_from_matrices(const Eigen::MatrixXd& m, const Eigen::MatrixXd& sigma,
                          int p);

/// Value actually minimized during selection: the raw criterion for QIC,
/// CIC, SC, GPC and the distance from the ideal point for the RJ family
/// (|rj1 - 1|, |rj2 - 1|, |dbar|).
double selection_value(const CriterionValues& values, Criterion c);

struct Candidate {
  CorrelationKind kind = CorrelationKind::Independence;
  GeeFit fit;
  bool usable = false;       // fit converged and criteria computed
  CriterionValues values;    // meaningful only when usable
  std::string note;          // why the candidate was excluded
};

struct SelectionReport {
  std::vector<Candidate> candidates;
  /// Index into candidates per criterion (kAllCriteria order); -1 if the
  /// criterion could not pick a winner.
  std::array<int, 7> winner{};
  int n_excluded = 0;

  CorrelationKind winner_kind(Criterion c) const;  // throws ConvergenceError
};

/// Picks, per criterion, the usable candidate with the smallest selection
/// value; exact ties go to the structurally simpler candidate.
std::array<int, 7> compute_winners(const std::vector<Candidate>& candidates);

/// Fits every candidate structure and evaluates all seven criteria on each.
/// Candidates whose fits fail to converge (or whose structure is infeasible
/// on this dataset) are excluded and noted; if nothing survives, throws
/// ConvergenceError.
SelectionReport select(const LongitudinalDataset& data, const Family& family,
                       const std::vector<CorrelationKind>& candidates,
                       const FitOptions& options = {});

}  // namespace geepress

#endif  // GEEPRESS_CRITERIA_HPP
