// geepress: GEE fitting, working-correlation selection, and the simulation
// harness behind the replication reports.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "geepress/criteria.hpp"
#include "geepress/errors.hpp"
#include "geepress/gee.hpp"
#include "geepress/harness.hpp"
#include "geepress/inference.hpp"
#include "geepress/io.hpp"
#include "geepress/simgen.hpp"

namespace {

using namespace geepress;

constexpr std::uint64_t kDefaultSeed = 1;

std::uint64_t seed_or_env(CLI::Option* seed_opt, std::uint64_t seed_value) {
  if (seed_opt->count() > 0) return seed_value;
  const char* env = std::getenv("GEEPRESS_SEED");
  if (env == nullptr) return kDefaultSeed;
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("GEEPRESS_SEED is not an integer: '") + env +
                     "'");
  }
}

std::vector<CorrelationKind> parse_candidate_list(const std::string& csv) {
  std::vector<CorrelationKind> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(parse_correlation(tok));
  }
  if (out.empty()) throw ParameterError("empty candidate list");
  return out;
}

std::vector<Criterion> parse_criterion_list(const std::string& csv) {
  std::vector<Criterion> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(parse_criterion(tok));
  }
  if (out.empty()) throw ParameterError("empty criterion list");
  return out;
}

/// Term names are the design columns: x1..xp.
std::vector<int> parse_term_list(const std::string& csv, int p) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::string t = tok;
    if (t[0] == 'x') t.erase(0, 1);
    int idx = 0;
    try {
      idx = std::stoi(t);
    } catch (const std::exception&) {
      throw ParameterError("bad coefficient name '" + tok +
                           "' (expected x1..x" + std::to_string(p) + ")");
    }
    if (idx < 1 || idx > p) {
      throw ParameterError("coefficient '" + tok + "' out of range 1.." +
                           std::to_string(p));
    }
    out.push_back(idx - 1);
  }
  if (out.empty()) throw ParameterError("empty coefficient list");
  return out;
}

struct FitArgs {
  std::string data_path;
  std::string family_name;
  std::string corr_name = "indep";
  std::string phi_mode = "estimate";
  int max_iter = 200;
  double tol = 1e-8;
  int precision = 6;
  std::string out_path;  // empty = stdout
};

void add_fit_flags(CLI::App* cmd, FitArgs* args) {
  cmd->add_option("--data", args->data_path, "long-format CSV (id,time,y,x1..xp)")
      ->required();
  cmd->add_option("--family", args->family_name,
                  "marginal family: binary, poisson, gaussian")
      ->required();
  cmd->add_option("--phi", args->phi_mode,
                  "dispersion handling: estimate or fix1")
      ->check(CLI::IsMember({"estimate", "fix1"}));
  cmd->add_option("--max-iter", args->max_iter, "iteration cap");
  cmd->add_option("--tol", args->tol, "coefficient-step convergence threshold");
  cmd->add_option("--precision", args->precision,
                  "significant digits in numeric output");
  cmd->add_option("--out", args->out_path, "output file (default stdout)");
}

FitOptions make_fit_options(const FitArgs& args) {
  FitOptions opt;
  opt.max_iter = args.max_iter;
  opt.tol = args.tol;
  opt.phi_mode =
      args.phi_mode == "fix1" ? PhiMode::FixedOne : PhiMode::Estimate;
  return opt;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw InputError("cannot open output file '" + path + "'");
  return file;
}

void print_correlation(std::ostream& out, const GeeFit& fit, int precision) {
  const WorkingCorrelation& wc = fit.correlation;
  switch (wc.kind) {
    case CorrelationKind::Independence:
      break;
    case CorrelationKind::Ar1:
    case CorrelationKind::Exchangeable:
      out << "alpha = " << format_g(wc.alpha, precision) << "\n";
      break;
    case CorrelationKind::Unstructured:
      for (Eigen::Index s = 0; s < wc.matrix.rows(); ++s) {
        for (Eigen::Index t = s + 1; t < wc.matrix.cols(); ++t) {
          out << "alpha[" << wc.wave_grid[s] << ',' << wc.wave_grid[t]
              << "] = " << format_g(wc.matrix(s, t), precision) << "\n";
        }
      }
      break;
  }
}

int cmd_fit(const FitArgs& args, const std::string& test_zero,
            const std::string& test_kind, bool with_criteria) {
  const Family family(parse_family(args.family_name));
  const CorrelationKind kind = parse_correlation(args.corr_name);
  const LongitudinalDataset data = read_long_csv_file(args.data_path);
  const GeeFit result = fit(data, family, kind, make_fit_options(args));

  std::ofstream file;
  std::ostream& out = open_output(args.out_path, file);
  const int prec = args.precision;
  out << "family = " << family.name() << "\n"
      << "working = " << correlation_name(kind) << "\n"
      << "converged = " << (result.converged ? "yes" : "no") << "\n"
      << "iterations = " << result.iterations << "\n"
      << "clusters = " << result.n_clusters() << "\n"
      << "observations = " << result.total_obs << "\n"
      << "phi = " << format_g(result.phi, prec) << "\n";
  print_correlation(out, result, prec);
  out << "quasi_likelihood = " << format_g(result.quasi_lik, prec) << "\n";
  for (const std::string& note : result.notes) out << "note = " << note << "\n";
  out << "term,estimate,se_model,se_robust\n";
  for (int j = 0; j < result.p(); ++j) {
    out << 'x' << (j + 1) << ',' << format_g(result.beta[j], prec) << ','
        << format_g(std::sqrt(result.model_cov(j, j)), prec) << ','
        << format_g(std::sqrt(result.sandwich_cov(j, j)), prec) << "\n";
  }
  if (!result.converged) {
    std::cerr << "error: fit did not converge within " << args.max_iter
              << " iterations\n";
    return 2;
  }
  if (with_criteria) {
    const CriterionValues values = all_criteria(result);
    out << "criterion,value\n";
    for (Criterion c : kAllCriteria) {
      out << criterion_name(c) << ',' << format_g(values.raw(c), prec) << "\n";
    }
  }
  if (!test_zero.empty()) {
    const std::vector<int> terms = parse_term_list(test_zero, result.p());
    const LinearHypothesis hyp =
        LinearHypothesis::zero_coefficients(terms, result.p());
    out << "test,statistic,df,p_value\n";
    if (test_kind == "wald" || test_kind == "both") {
      const TestResult t = wald_test(result, hyp);
      out << "wald," << format_g(t.statistic, prec) << ',' << t.df << ','
          << format_g(t.p_value, prec) << "\n";
    }
    if (test_kind == "score" || test_kind == "both") {
      const TestResult t =
          score_test(data, family, kind, hyp, make_fit_options(args));
      out << "score," << format_g(t.statistic, prec) << ',' << t.df << ','
          << format_g(t.p_value, prec) << "\n";
    }
  }
  return 0;
}

int cmd_select(const FitArgs& args, const std::string& candidates_csv,
               const std::string& criteria_csv) {
  const Family family(parse_family(args.family_name));
  const std::vector<CorrelationKind> candidates =
      parse_candidate_list(candidates_csv);
  const std::vector<Criterion> criteria = parse_criterion_list(criteria_csv);
  const LongitudinalDataset data = read_long_csv_file(args.data_path);
  const SelectionReport report =
      select(data, family, candidates, make_fit_options(args));

  std::ofstream file;
  std::ostream& out = open_output(args.out_path, file);
  const int prec = args.precision;
  out << "family = " << family.name() << "\n";
  for (const Candidate& cand : report.candidates) {
    out << "candidate = " << correlation_name(cand.kind)
        << (cand.usable ? "" : " (excluded: " + cand.note + ")") << "\n";
    if (cand.usable) {
      out << "  phi = " << format_g(cand.fit.phi, prec) << "\n";
      std::ostringstream alpha;
      print_correlation(alpha, cand.fit, prec);
      std::istringstream lines(alpha.str());
      std::string line;
      while (std::getline(lines, line)) out << "  " << line << "\n";
    }
  }
  out << "criterion";
  for (const Candidate& cand : report.candidates) {
    out << ',' << correlation_name(cand.kind);
  }
  out << ",winner\n";
  for (Criterion c : criteria) {
    out << criterion_name(c);
    for (const Candidate& cand : report.candidates) {
      out << ',';
      if (cand.usable) out << format_g(selection_value(cand.values, c), prec);
    }
    out << ',' << correlation_name(report.winner_kind(c)) << "\n";
  }
  return 0;
}

int cmd_diagnose(const FitArgs& args) {
  const Family family(parse_family(args.family_name));
  const CorrelationKind kind = parse_correlation(args.corr_name);
  const LongitudinalDataset data = read_long_csv_file(args.data_path);
  const GeeFit result = fit(data, family, kind, make_fit_options(args));
  if (!result.converged) {
    std::cerr << "error: fit did not converge within " << args.max_iter
              << " iterations\n";
    return 2;
  }
  std::ofstream file;
  std::ostream& out = open_output(args.out_path, file);
  const int prec = args.precision;
  out << "cluster,size,trace_h,sc_contrib,press_contrib,dbeta_norm\n";
  for (int i = 0; i < result.n_clusters(); ++i) {
    const ClusterCache& cc = result.cluster[i];
    Eigen::LLT<Eigen::MatrixXd> llt(cc.V);
    const double sc_i = cc.resid.dot(llt.solve(cc.resid));
    const Eigen::Index n = cc.resid.size();
    const Eigen::MatrixXd ImH = Eigen::MatrixXd::Identity(n, n) - cc.H;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(ImH);
    lu.setThreshold(kDeletionPivotThreshold);
    if (!lu.isInvertible()) {
      throw DeletionSingularError("(I - H) is singular for cluster '" +
                                  data.clusters[i].id + "'");
    }
    const Eigen::VectorXd a = lu.solve(cc.resid);
    const double press_i = a.dot(llt.solve(a));
    const double dbeta = one_step_deletion(result, i).norm();
    out << csv_field(data.clusters[i].id) << ',' << data.clusters[i].size()
        << ',' << format_g(cc.H.trace(), prec) << ',' << format_g(sc_i, prec)
        << ',' << format_g(press_i, prec) << ',' << format_g(dbeta, prec)
        << "\n";
  }
  return 0;
}

int cmd_simulate(bool list_scenarios, const std::string& cell, int reps,
                 std::uint64_t seed, const std::string& out_dir,
                 int precision) {
  if (list_scenarios) {
    for (const ScenarioSpec& spec : standard_scenarios(seed)) {
      std::cout << spec.cell_id() << "\n";
    }
    return 0;
  }
  if (cell.empty()) {
    throw InputError("simulate needs --scenario <cell> or --list-scenarios");
  }
  const ScenarioSpec spec = ScenarioSpec::from_cell_id(cell, seed);
  if (reps < 0) throw InputError("--reps must be >= 0");
  if (reps == 0) {
    std::cout << "scenario " << spec.cell_id() << " ok (dry run, 0 datasets)\n";
    return 0;
  }
  if (out_dir.empty()) {
    throw InputError("simulate needs --out-dir to write datasets");
  }
  const std::filesystem::path dir =
      std::filesystem::path(out_dir) / spec.cell_id();
  std::filesystem::create_directories(dir);
  LatentSolver solver;
  for (int r = 0; r < reps; ++r) {
    const LongitudinalDataset data = generate_dataset(spec, r, solver);
    write_long_csv_file((dir / ("rep" + std::to_string(r) + ".csv")).string(),
                        data, precision);
  }
  std::cout << "wrote " << reps << " dataset(s) under " << dir.string() << "\n";
  return 0;
}

int cmd_replicate(const std::string& config_path, const std::string& tables_csv,
                  const std::string& cells_csv, int reps,
                  CLI::Option* reps_opt, std::uint64_t seed,
                  CLI::Option* seed_opt, const std::string& out_dir,
                  CLI::Option* out_opt, int jobs, CLI::Option* jobs_opt,
                  int precision, CLI::Option* prec_opt) {
  ReportConfig config;
  if (!config_path.empty()) {
    config = ReportConfig::from_map(parse_config_file(config_path));
  }
  if (!tables_csv.empty()) {
    config.tables.clear();
    if (tables_csv == "all") {
      config.tables = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    } else {
      std::stringstream ss(tables_csv);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) config.tables.push_back(std::stoi(tok));
      }
    }
  }
  if (!cells_csv.empty()) {
    config.cells.clear();
    std::stringstream ss(cells_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) config.cells.push_back(tok);
    }
  }
  if (reps_opt->count() > 0) config.replicates = reps;
  if (seed_opt->count() > 0) {
    config.seed = seed;
  } else if (config_path.empty()) {
    config.seed = seed_or_env(seed_opt, seed);
  }
  if (out_opt->count() > 0) config.out_dir = out_dir;
  if (jobs_opt->count() > 0) config.jobs = jobs;
  if (prec_opt->count() > 0) config.precision = precision;

  const ReportSummary summary = replicate_report(config, &std::cout);
  std::cout << "scenarios run: " << summary.scenarios_run << "\n"
            << "comparisons beyond the noise band: " << summary.cells_flagged
            << "\n";
  for (const std::string& f : summary.files_written) {
    std::cout << "wrote " << f << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "GEE marginal regression with working-correlation selection "
      "(includes a predictive deletion-based criterion), a correlated-data "
      "simulator, and a Monte Carlo replication harness"};
  app.require_subcommand(1);

  // fit
  FitArgs fit_args;
  std::string test_zero, test_kind = "both";
  bool with_criteria = false;
  CLI::App* fit_cmd = app.add_subcommand("fit", "fit one GEE model");
  add_fit_flags(fit_cmd, &fit_args);
  fit_cmd->add_option("--corr", fit_args.corr_name,
                      "working correlation: indep, ar1, exch, un");
  fit_cmd->add_option("--test-zero", test_zero,
                      "comma list of coefficients (x2,x3,...) to test = 0");
  fit_cmd->add_option("--test-kind", test_kind, "wald, score, or both")
      ->check(CLI::IsMember({"wald", "score", "both"}));
  fit_cmd->add_flag("--criteria", with_criteria,
                    "also print the selection criteria of this fit");

  // select
  FitArgs sel_args;
  std::string candidates_csv = "indep,ar1,exch,un";
  std::string criteria_csv = "CIC,DBAR,GPC,QIC,RJ1,RJ2,SC";
  CLI::App* sel_cmd = app.add_subcommand(
      "select", "fit candidate working structures and rank them");
  add_fit_flags(sel_cmd, &sel_args);
  sel_cmd->add_option("--candidates", candidates_csv,
                      "comma list of working structures");
  sel_cmd->add_option("--criteria", criteria_csv, "comma list of criteria");

  // diagnose
  FitArgs diag_args;
  CLI::App* diag_cmd = app.add_subcommand(
      "diagnose", "per-cluster leverage and deletion diagnostics");
  add_fit_flags(diag_cmd, &diag_args);
  diag_cmd->add_option("--corr", diag_args.corr_name,
                       "working correlation: indep, ar1, exch, un");

  // simulate
  bool list_scenarios = false;
  std::string sim_cell, sim_out_dir;
  int sim_reps = 0, sim_precision = 17;
  std::uint64_t sim_seed = kDefaultSeed;
  CLI::App* sim_cmd = app.add_subcommand(
      "simulate", "generate benchmark scenario datasets");
  sim_cmd->add_flag("--list-scenarios", list_scenarios,
                    "print the 48 standard scenario cells and exit");
  sim_cmd->add_option("--scenario", sim_cell,
                      "cell id, e.g. binary-balanced-ar1-a0.2-N50");
  sim_cmd->add_option("--reps", sim_reps,
                      "datasets to generate (0 validates the cell id only)");
  CLI::Option* sim_seed_opt =
      sim_cmd->add_option("--seed", sim_seed, "RNG seed (or GEEPRESS_SEED)");
  sim_cmd->add_option("--out-dir", sim_out_dir, "output directory");
  sim_cmd->add_option("--precision", sim_precision,
                      "significant digits in the CSVs");

  // replicate
  std::string rep_config, rep_tables, rep_cells, rep_out_dir = "report";
  int rep_reps = 1000, rep_jobs = 1, rep_precision = 6;
  std::uint64_t rep_seed = kDefaultSeed;
  CLI::App* rep_cmd = app.add_subcommand(
      "replicate", "run benchmark tables and write the comparison report");
  rep_cmd->add_option("--config", rep_config, "key = value config file");
  rep_cmd->add_option("--tables", rep_tables,
                      "comma list of table ids 1..9, or 'all'");
  rep_cmd->add_option("--cells", rep_cells, "comma list of extra cell ids");
  CLI::Option* rep_reps_opt =
      rep_cmd->add_option("--reps", rep_reps, "replicates per cell");
  CLI::Option* rep_seed_opt =
      rep_cmd->add_option("--seed", rep_seed, "RNG seed (or GEEPRESS_SEED)");
  CLI::Option* rep_out_opt =
      rep_cmd->add_option("--out-dir", rep_out_dir, "report directory");
  CLI::Option* rep_jobs_opt =
      rep_cmd->add_option("--jobs", rep_jobs, "worker threads (0 = all cores)");
  CLI::Option* rep_prec_opt = rep_cmd->add_option(
      "--precision", rep_precision, "significant digits in the CSVs");

  try {
    app.parse(argc, argv);
    if (fit_cmd->parsed()) {
      return cmd_fit(fit_args, test_zero, test_kind, with_criteria);
    }
    if (sel_cmd->parsed()) {
      return cmd_select(sel_args, candidates_csv, criteria_csv);
    }
    if (diag_cmd->parsed()) return cmd_diagnose(diag_args);
    if (sim_cmd->parsed()) {
      return cmd_simulate(list_scenarios, sim_cell, sim_reps,
                          seed_or_env(sim_seed_opt, sim_seed), sim_out_dir,
                          sim_precision);
    }
    if (rep_cmd->parsed()) {
      return cmd_replicate(rep_config, rep_tables, rep_cells, rep_reps,
                           rep_reps_opt, rep_seed, rep_seed_opt, rep_out_dir,
                           rep_out_opt, rep_jobs, rep_jobs_opt, rep_precision,
                           rep_prec_opt);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    // Numerical failures: non-convergence, rank problems, infeasible
    // structures, generation-range violations.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
