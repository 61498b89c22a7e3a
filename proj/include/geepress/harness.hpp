#ifndef GEEPRESS_HARNESS_HPP
#define GEEPRESS_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "geepress/criteria.hpp"
#include "geepress/simgen.hpp"

namespace geepress {

/// One Monte Carlo experiment: repeatedly generate a scenario's data, fit
/// every candidate working structure, and track which structure each
/// criterion selects plus the squared coefficient errors.
struct ScenarioRequest {
  ScenarioSpec spec;
  std::vector<CorrelationKind> candidates = {
      CorrelationKind::Independence, CorrelationKind::Ar1,
      CorrelationKind::Exchangeable, CorrelationKind::Unstructured};
  std::vector<Criterion> criteria{kAllCriteria.begin(), kAllCriteria.end()};
  int replicates = 1000;
  int jobs = 1;  // worker threads; 0 = hardware concurrency
  FitOptions fit_options = default_fit_options();

  /// Simulation fits pin the dispersion at 1, matching how the benchmark
  /// scenarios are defined.
  static FitOptions default_fit_options() {
    FitOptions opt;
    opt.phi_mode = PhiMode::FixedOne;
    return opt;
  }
};

struct ScenarioResult {
  ScenarioSpec spec;
  std::vector<CorrelationKind> candidates;
  std::vector<Criterion> criteria;
  int replicates = 0;
  int completed = 0;  // replicates where every candidate converged
  int failed = 0;
  bool degraded = false;  // more than 5% of replicates failed
  /// Selection counts: criteria.size() x candidates.size().
  Eigen::MatrixXi selection_counts;
  /// Mean squared error of each coefficient under each candidate,
  /// averaged over completed replicates: p x candidates.size().
  Eigen::MatrixXd mse;
  double wall_seconds = 0.0;
  std::vector<std::string> notes;

  Eigen::MatrixXd selection_proportions() const;
};

/// Runs the experiment.  Replicates draw from per-replicate RNG streams and
/// results are reduced in replicate order, so the outcome is identical for
/// any job count.  Throws ConvergenceError when every replicate fails;
/// flags `degraded` past 5% failures.
ScenarioResult run_scenario(const ScenarioRequest& request);

/// Replication report over the standard simulation grid.
struct ReportConfig {
  std::vector<int> tables;         // 1..8 full grid, 9 = reduced candidates
  std::vector<std::string> cells;  // extra explicit cell ids (full candidates)
  int replicates = 1000;
  std::uint64_t seed = 1;
  std::string out_dir = "report";
  int jobs = 1;
  int precision = 6;

  /// Reads keys: tables (csv of 1..9 or "all"), cells, replicates, seed,
  /// out_dir, jobs, precision.  Unknown keys throw InputError.
  static ReportConfig from_map(const std::map<std::string, std::string>& kv);
};

struct ReportSummary {
  int scenarios_run = 0;
  int cells_flagged = 0;  // comparisons beyond the expected noise band
  std::vector<std::string> files_written;
};

/// Runs every requested table cell, writes one selection CSV (and, for the
/// full-candidate tables, one MSE CSV) per table plus a Markdown summary,
/// each with benchmark reference columns and deviation flags.  Progress
/// lines go to `progress` when non-null.
ReportSummary replicate_report(const ReportConfig& config,
                               std::ostream* progress = nullptr);

}  // namespace geepress

#endif  // GEEPRESS_HARNESS_HPP
