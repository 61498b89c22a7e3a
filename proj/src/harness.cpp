#include "geepress/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "geepress/errors.hpp"
#include "geepress/io.hpp"
#include "geepress/reference.hpp"

namespace geepress {

namespace {

constexpr double kSelectionFlagBand = 0.05;  // noise band for proportions
constexpr double kMseFlagBand = 0.03;        // noise band for MSE values
constexpr int kMaxFailureNotes = 5;

struct ReplicateOutcome {
  bool ok = false;
  std::array<int, 7> winner{};  // candidate index per criterion
  Eigen::MatrixXd sqerr;        // p x candidates
  std::string error;
};

ReplicateOutcome run_one(const ScenarioRequest& request, int replicate,
                         LatentSolver& solver) {
  ReplicateOutcome out;
  try {
    const LongitudinalDataset data =
        generate_dataset(request.spec, replicate, solver);
    const Family family(request.spec.family);
    const SelectionReport report =
        select(data, family, request.candidates, request.fit_options);
    if (report.n_excluded > 0) {
      for (const auto& cand : report.candidates) {
        if (!cand.usable) {
          out.error = correlation_name(cand.kind) + ": " +
                      (cand.note.empty() ? "excluded" : cand.note);
          break;
        }
      }
      return out;
    }
    out.winner = report.winner;
    const Eigen::VectorXd truth = request.spec.effective_beta();
    out.sqerr.resize(truth.size(), request.candidates.size());
    for (std::size_t k = 0; k < report.candidates.size(); ++k) {
      const Eigen::VectorXd err = report.candidates[k].fit.beta - truth;
      out.sqerr.col(k) = err.cwiseProduct(err);
    }
    out.ok = true;
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

std::string display_structure(CorrelationKind kind) {
  switch (kind) {
    case CorrelationKind::Independence: return "Indep";
    case CorrelationKind::Ar1: return "AR(1)";
    case CorrelationKind::Exchangeable: return "Exch";
    case CorrelationKind::Unstructured: return "UN";
  }
  return "?";
}

}  // namespace

Eigen::MatrixXd ScenarioResult::selection_proportions() const {
  if (completed == 0) {
    return Eigen::MatrixXd::Zero(selection_counts.rows(),
                                 selection_counts.cols());
  }
  return selection_counts.cast<double>() / completed;
}

ScenarioResult run_scenario(const ScenarioRequest& request) {
  if (request.replicates < 1) {
    throw ParameterError("a scenario run needs at least one replicate");
  }
  if (request.candidates.empty()) {
    throw ParameterError("a scenario run needs at least one candidate");
  }
  if (request.criteria.empty()) {
    throw ParameterError("a scenario run needs at least one criterion");
  }
  const auto start = std::chrono::steady_clock::now();
  const int R = request.replicates;
  const int K = static_cast<int>(request.candidates.size());
  const int p = static_cast<int>(request.spec.effective_beta().size());

  std::vector<ReplicateOutcome> outcomes(R);
  LatentSolver solver;
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= R) break;
      outcomes[r] = run_one(request, r, solver);
    }
  };
  int jobs = request.jobs == 0
                 ? static_cast<int>(std::thread::hardware_concurrency())
                 : request.jobs;
  jobs = std::clamp(jobs, 1, R);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ScenarioResult result;
  result.spec = request.spec;
  result.candidates = request.candidates;
  result.criteria = request.criteria;
  result.replicates = R;
  const int C = static_cast<int>(request.criteria.size());
  result.selection_counts = Eigen::MatrixXi::Zero(C, K);
  result.mse = Eigen::MatrixXd::Zero(p, K);

  // Reduce in replicate order so the result does not depend on scheduling.
  for (int r = 0; r < R; ++r) {
    const ReplicateOutcome& o = outcomes[r];
    if (!o.ok) {
      ++result.failed;
      if (static_cast<int>(result.notes.size()) < kMaxFailureNotes) {
        result.notes.push_back("replicate " + std::to_string(r) + ": " +
                               o.error);
      }
      continue;
    }
    ++result.completed;
    for (int ci = 0; ci < C; ++ci) {
      const int all_index = static_cast<int>(request.criteria[ci]);
      const int win = o.winner[all_index];
      if (win >= 0) result.selection_counts(ci, win) += 1;
    }
    result.mse += o.sqerr;
  }
  if (result.completed == 0) {
    throw ConvergenceError(
        "every replicate failed" +
        (result.notes.empty() ? std::string()
                              : "; first failure: " + result.notes.front()));
  }
  result.mse /= result.completed;
  if (result.failed > 0.05 * R) {
    result.degraded = true;
    result.notes.push_back("more than 5% of replicates failed (" +
                           std::to_string(result.failed) + " of " +
                           std::to_string(R) + ")");
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

ReportConfig ReportConfig::from_map(
    const std::map<std::string, std::string>& kv) {
  ReportConfig config;
  for (const auto& [key, value] : kv) {
    try {
      if (key == "tables") {
        if (value == "all") {
          config.tables = {1, 2, 3, 4, 5, 6, 7, 8, 9};
        } else {
          std::stringstream ss(value);
          std::string tok;
          while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) config.tables.push_back(std::stoi(tok));
          }
        }
      } else if (key == "cells") {
        std::stringstream ss(value);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          if (!tok.empty()) config.cells.push_back(tok);
        }
      } else if (key == "replicates") {
        config.replicates = std::stoi(value);
      } else if (key == "seed") {
        config.seed = std::stoull(value);
      } else if (key == "out_dir") {
        config.out_dir = value;
      } else if (key == "jobs") {
        config.jobs = std::stoi(value);
      } else if (key == "precision") {
        config.precision = std::stoi(value);
      } else {
        throw InputError("unknown report config key '" + key + "'");
      }
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      throw InputError("bad value for report config key '" + key + "': '" +
                       value + "'");
    }
  }
  for (int t : config.tables) {
    if (t < 1 || t > 9) {
      throw InputError("report table ids must lie in 1..9");
    }
  }
  return config;
}

namespace {

/// The scenario grid cells belonging to one published table.
std::vector<ScenarioSpec> table_cells(int table, std::uint64_t seed) {
  const int block = table == 9 ? 0 : table - 1;
  ScenarioSpec base;
  base.family = block < 4 ? FamilyKind::BinaryLogit : FamilyKind::PoissonLog;
  base.balance = (block % 4) < 2 ? Balance::Balanced : Balance::Unbalanced;
  base.alpha = (block % 2) == 0 ? 0.2 : 0.4;
  base.seed = seed;
  std::vector<CorrelationKind> structures = {CorrelationKind::Ar1,
                                             CorrelationKind::Exchangeable,
                                             CorrelationKind::Unstructured};
  if (table == 9) structures.pop_back();
  std::vector<ScenarioSpec> out;
  for (CorrelationKind s : structures) {
    for (int n : {50, 100}) {
      ScenarioSpec spec = base;
      spec.true_structure = s;
      spec.n_subjects = n;
      out.push_back(spec);
    }
  }
  return out;
}

std::string dev_field(double mine, double ref, int precision) {
  if (std::isnan(ref)) return "";
  return format_g(std::abs(mine - ref), precision);
}

/// One row of a selection CSV, with reference and deviation columns.
void write_selection_rows(std::ostream& out, int table,
                          const ScenarioResult& result, bool reduced,
                          int precision, int* flagged) {
  const Eigen::MatrixXd props = result.selection_proportions();
  for (std::size_t ci = 0; ci < result.criteria.size(); ++ci) {
    for (std::size_t k = 0; k < result.candidates.size(); ++k) {
      const double mine = props(ci, k);
      const double ref =
          reduced ? reference::reduced_selection_value(
                        result.spec, result.criteria[ci], result.candidates[k])
                  : reference::selection_value(result.spec,
                                               result.criteria[ci],
                                               result.candidates[k]);
      const bool flag =
          !std::isnan(ref) && std::abs(mine - ref) > kSelectionFlagBand;
      if (flag) ++*flagged;
      out << table << ',' << csv_field(result.spec.cell_id()) << ','
          << correlation_name(result.spec.true_structure) << ','
          << result.spec.n_subjects << ','
          << criterion_name(result.criteria[ci]) << ','
          << correlation_name(result.candidates[k]) << ','
          << format_g(mine, precision) << ','
          << (std::isnan(ref) ? "" : format_g(ref, precision)) << ','
          << dev_field(mine, ref, precision) << ','
          << (flag ? "large-dev" : "") << "\n";
    }
  }
}

void write_mse_rows(std::ostream& out, int table, const ScenarioResult& result,
                    int precision, int* flagged) {
  for (int param = 0; param < result.mse.rows(); ++param) {
    for (std::size_t k = 0; k < result.candidates.size(); ++k) {
      const double mine = result.mse(param, k);
      const double ref =
          reference::mse_value(result.spec, param, result.candidates[k]);
      const bool flag = !std::isnan(ref) && std::abs(mine - ref) > kMseFlagBand;
      if (flag) ++*flagged;
      out << table << ',' << csv_field(result.spec.cell_id()) << ','
          << correlation_name(result.spec.true_structure) << ','
          << result.spec.n_subjects << ",beta" << param << ','
          << correlation_name(result.candidates[k]) << ','
          << format_g(mine, precision) << ','
          << (std::isnan(ref) ? "" : format_g(ref, precision)) << ','
          << dev_field(mine, ref, precision) << ','
          << (flag ? "large-dev" : "") << "\n";
    }
  }
}

std::string selection_header() {
  return "table,cell,true_structure,n_subjects,criterion,working,proportion,"
         "reference,abs_dev,flag\n";
}

std::string mse_header() {
  return "table,cell,true_structure,n_subjects,param,working,mse,reference,"
         "abs_dev,flag\n";
}

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

/// Markdown block for one table (both sample sizes): one row per (true
/// structure, criterion), one column per working structure, each cell
/// "observed (reference)".  The row maximum among the observed proportions
/// is bolded; deviations beyond the noise band get an asterisk.
void markdown_selection(std::ostream& md,
                        const std::vector<ScenarioResult>& results,
                        bool reduced) {
  for (int n : {50, 100}) {
    md << "\n**N = " << n << "**\n\n";
    md << "| True | Criterion |";
    const auto& cands = results.front().candidates;
    for (CorrelationKind k : cands) md << ' ' << display_structure(k) << " |";
    md << "\n|---|---|";
    for (std::size_t k = 0; k < cands.size(); ++k) md << "---|";
    md << "\n";
    for (const ScenarioResult& result : results) {
      if (result.spec.n_subjects != n) continue;
      const Eigen::MatrixXd props = result.selection_proportions();
      for (std::size_t ci = 0; ci < result.criteria.size(); ++ci) {
        md << "| " << display_structure(result.spec.true_structure) << " | "
           << criterion_name(result.criteria[ci]) << " |";
        const double row_max = props.row(ci).maxCoeff();
        for (std::size_t k = 0; k < cands.size(); ++k) {
          const double mine = props(ci, k);
          const double ref =
              reduced ? reference::reduced_selection_value(
                            result.spec, result.criteria[ci], cands[k])
                      : reference::selection_value(result.spec,
                                                   result.criteria[ci],
                                                   cands[k]);
          const bool bold = mine == row_max && row_max > 0.0;
          const bool flag =
              !std::isnan(ref) && std::abs(mine - ref) > kSelectionFlagBand;
          md << ' ' << (bold ? "**" : "") << fmt3(mine) << (bold ? "**" : "");
          if (!std::isnan(ref)) md << " (" << fmt3(ref) << ")";
          if (flag) md << "\\*";
          md << " |";
        }
        md << "\n";
      }
    }
  }
}

void markdown_mse(std::ostream& md, const std::vector<ScenarioResult>& results) {
  for (int n : {50, 100}) {
    md << "\n**MSE, N = " << n << "**\n\n";
    md << "| True | Param |";
    const auto& cands = results.front().candidates;
    for (CorrelationKind k : cands) md << ' ' << display_structure(k) << " |";
    md << "\n|---|---|";
    for (std::size_t k = 0; k < cands.size(); ++k) md << "---|";
    md << "\n";
    for (const ScenarioResult& result : results) {
      if (result.spec.n_subjects != n) continue;
      for (int param = 0; param < result.mse.rows(); ++param) {
        md << "| " << display_structure(result.spec.true_structure)
           << " | beta" << param << " |";
        for (std::size_t k = 0; k < cands.size(); ++k) {
          const double mine = result.mse(param, k);
          const double ref = reference::mse_value(result.spec, param, cands[k]);
          const bool flag =
              !std::isnan(ref) && std::abs(mine - ref) > kMseFlagBand;
          md << ' ' << fmt3(mine);
          if (!std::isnan(ref)) md << " (" << fmt3(ref) << ")";
          if (flag) md << "\\*";
          md << " |";
        }
        md << "\n";
      }
    }
  }
}

std::string table_title(int table) {
  if (table == 9) {
    return "reduced candidates (Indep, AR(1), Exch); binary, balanced, "
           "alpha = 0.2";
  }
  const int block = table - 1;
  std::string title = block < 4 ? "binary" : "count";
  title += (block % 4) < 2 ? ", balanced" : ", unbalanced";
  title += (block % 2) == 0 ? ", alpha = 0.2" : ", alpha = 0.4";
  return title;
}

}  // namespace

ReportSummary replicate_report(const ReportConfig& config,
                               std::ostream* progress) {
  if (config.replicates < 1) {
    throw ParameterError("report needs at least one replicate");
  }
  std::vector<int> tables = config.tables;
  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  for (int t : tables) {
    if (t < 1 || t > 9) throw ParameterError("table ids must lie in 1..9");
  }
  if (tables.empty() && config.cells.empty()) {
    throw ParameterError("report config selects no tables and no cells");
  }
  std::filesystem::create_directories(config.out_dir);

  ReportSummary summary;
  std::ostringstream md;
  md << "# Working-correlation selection replication\n\n"
     << "- replicates per cell: " << config.replicates << "\n"
     << "- seed: " << config.seed << "\n"
     << "- candidate criteria: CIC, DBAR, GPC, QIC, RJ1, RJ2, SC\n\n"
     << "Cell format: `observed (reference)`. Bold marks the row maximum "
        "among the observed proportions; `\\*` flags observed values more "
        "than "
     << kSelectionFlagBand << " (selection) or " << kMseFlagBand
     << " (MSE) away from the reference. The bands are calibrated for "
        "1000-replicate runs; with fewer replicates, Monte Carlo noise "
        "alone will trip them more often.\n";

  auto run_cell = [&](const ScenarioRequest& request) {
    if (progress != nullptr) {
      *progress << "running " << request.spec.cell_id() << " ("
                << request.replicates << " replicates)..." << std::flush;
    }
    ScenarioResult result = run_scenario(request);
    if (progress != nullptr) {
      *progress << " done in " << format_g(result.wall_seconds, 3) << " s";
      if (result.failed > 0) {
        *progress << " (" << result.failed << " failed)";
      }
      *progress << "\n";
    }
    ++summary.scenarios_run;
    return result;
  };

  for (int table : tables) {
    const bool reduced = table == 9;
    std::vector<ScenarioResult> results;
    for (const ScenarioSpec& spec : table_cells(table, config.seed)) {
      ScenarioRequest request;
      request.spec = spec;
      if (reduced) {
        request.candidates = {CorrelationKind::Independence,
                              CorrelationKind::Ar1,
                              CorrelationKind::Exchangeable};
      }
      request.replicates = config.replicates;
      request.jobs = config.jobs;
      results.push_back(run_cell(request));
    }

    const std::string sel_path = config.out_dir + "/table" +
                                 std::to_string(table) + "_selection.csv";
    std::ofstream sel(sel_path);
    if (!sel) throw InputError("cannot open '" + sel_path + "'");
    sel << selection_header();
    for (const ScenarioResult& r : results) {
      write_selection_rows(sel, table, r, reduced, config.precision,
                           &summary.cells_flagged);
    }
    summary.files_written.push_back(sel_path);

    if (!reduced) {
      const std::string mse_path =
          config.out_dir + "/table" + std::to_string(table) + "_mse.csv";
      std::ofstream mse(mse_path);
      if (!mse) throw InputError("cannot open '" + mse_path + "'");
      mse << mse_header();
      for (const ScenarioResult& r : results) {
        write_mse_rows(mse, table, r, config.precision,
                       &summary.cells_flagged);
      }
      summary.files_written.push_back(mse_path);
    }

    md << "\n## Table " << table << " — " << table_title(table) << "\n";
    int total_failed = 0;
    for (const ScenarioResult& r : results) total_failed += r.failed;
    if (total_failed > 0) {
      md << "\n" << total_failed << " replicate(s) failed across the table's "
         << "cells and were excluded.\n";
    }
    for (const ScenarioResult& r : results) {
      if (r.degraded) {
        md << "\n**Warning:** cell " << r.spec.cell_id()
           << " lost more than 5% of its replicates.\n";
      }
    }
    markdown_selection(md, results, reduced);
    if (!reduced) markdown_mse(md, results);
  }

  if (!config.cells.empty()) {
    const std::string path = config.out_dir + "/cells_selection.csv";
    std::ofstream sel(path);
    if (!sel) throw InputError("cannot open '" + path + "'");
    sel << selection_header();
    md << "\n## Extra cells\n";
    for (const std::string& cell : config.cells) {
      ScenarioRequest request;
      request.spec = ScenarioSpec::from_cell_id(cell, config.seed);
      request.replicates = config.replicates;
      request.jobs = config.jobs;
      const ScenarioResult result = run_cell(request);
      write_selection_rows(sel, 0, result, false, config.precision,
                           &summary.cells_flagged);
      std::vector<ScenarioResult> one{result};
      md << "\n### " << cell << "\n";
      markdown_selection(md, one, false);
    }
    summary.files_written.push_back(path);
  }

  const std::string md_path = config.out_dir + "/summary.md";
  std::ofstream mdf(md_path);
  if (!mdf) throw InputError("cannot open '" + md_path + "'");
  mdf << md.str();
  summary.files_written.push_back(md_path);
  return summary;
}

}  // namespace geepress
