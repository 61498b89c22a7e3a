#ifndef GEEPRESS_REFERENCE_HPP
#define GEEPRESS_REFERENCE_HPP

#include <cmath>
#include <limits>

#include "geepress/criteria.hpp"
#include "geepress/simgen.hpp"

namespace geepress::reference {

/// Benchmark selection proportions for the standard simulation grid, from
/// the published study this suite replicates at desk scale.
///
/// kSelection is indexed by
///   [table][true structure][sample size][criterion][working structure]
/// with tables 0..7 = (binary, count) x (balanced, unbalanced) x (0.2, 0.4)
/// in reporting order (binary balanced 0.2, binary balanced 0.4, binary
/// unbalanced 0.2, ..., count unbalanced 0.4), true structures (ar1, exch,
/// un), sample sizes (50, 100), criteria in kAllCriteria order, and working
/// structures (indep, ar1, exch, un).
extern const double kSelection[8][3][2][7][4];

/// Reduced-candidate variant (indep, ar1, exch): binary balanced 0.2 only,
/// true structures (ar1, exch).
extern const double kReducedSelection[2][2][7][3];

/// Mean squared errors of the coefficient estimates, indexed by
/// [table][true structure][sample size][coefficient][working structure].
extern const double kMse[8][3][2][3][4];

inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

/// Table index (0..7) of a scenario on the standard grid, or -1 when the
/// scenario is off-grid.
inline int table_index(const ScenarioSpec& spec) {
  int idx = 0;
  switch (spec.family) {
    case FamilyKind::BinaryLogit: break;
    case FamilyKind::PoissonLog: idx += 4; break;
    default: return -1;
  }
  if (spec.balance == Balance::Unbalanced) idx += 2;
  if (spec.alpha == 0.4) {
    idx += 1;
  } else if (spec.alpha != 0.2) {
    return -1;
  }
  return spec.max_waves == 5 ? idx : -1;
}

inline int structure_index(CorrelationKind kind) {
  switch (kind) {
    case CorrelationKind::Ar1: return 0;
    case CorrelationKind::Exchangeable: return 1;
    case CorrelationKind::Unstructured: return 2;
    default: return -1;
  }
}

inline int size_index(int n_subjects) {
  if (n_subjects == 50) return 0;
  if (n_subjects == 100) return 1;
  return -1;
}

inline int working_index(CorrelationKind kind) {
  switch (kind) {
    case CorrelationKind::Independence: return 0;
    case CorrelationKind::Ar1: return 1;
    case CorrelationKind::Exchangeable: return 2;
    case CorrelationKind::Unstructured: return 3;
  }
  return -1;
}

inline int criterion_index(Criterion c) { return static_cast<int>(c); }

/// Benchmark proportion of a criterion selecting a working structure in a
/// scenario; NaN when the scenario is off the standard grid.
inline double selection_value(const ScenarioSpec& spec, Criterion c,
                              CorrelationKind working) {
  const int t = table_index(spec);
  const int s = structure_index(spec.true_structure);
  const int n = size_index(spec.n_subjects);
  const int w = working_index(working);
  if (t < 0 || s < 0 || n < 0 || w < 0) return kMissing;
  return kSelection[t][s][n][criterion_index(c)][w];
}

/// Benchmark proportion under the reduced candidate set (indep, ar1, exch);
/// only defined for binary balanced alpha=0.2 with an ar1 or exch truth.
inline double reduced_selection_value(const ScenarioSpec& spec, Criterion c,
                                      CorrelationKind working) {
  if (table_index(spec) != 0) return kMissing;
  const int s = structure_index(spec.true_structure);
  const int n = size_index(spec.n_subjects);
  const int w = working_index(working);
  if (s < 0 || s > 1 || n < 0 || w < 0 || w > 2) return kMissing;
  return kReducedSelection[s][n][criterion_index(c)][w];
}

/// Benchmark MSE of coefficient `param` (0..2) under a working structure.
inline double mse_value(const ScenarioSpec& spec, int param,
                        CorrelationKind working) {
  const int t = table_index(spec);
  const int s = structure_index(spec.true_structure);
  const int n = size_index(spec.n_subjects);
  const int w = working_index(working);
  if (t < 0 || s < 0 || n < 0 || w < 0 || param < 0 || param > 2) {
    return kMissing;
  }
  return kMse[t][s][n][param][w];
}

}  // namespace geepress::reference

#endif  // GEEPRESS_REFERENCE_HPP
