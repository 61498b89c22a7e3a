#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "geepress/errors.hpp"
#include "geepress/harness.hpp"

using namespace geepress;

namespace {

ScenarioRequest small_request(const std::string& cell, int reps, int jobs) {
  ScenarioRequest req;
  req.spec = ScenarioSpec::from_cell_id(cell, 17);
  req.replicates = reps;
  req.jobs = jobs;
  return req;
}

}  // namespace

TEST_CASE("scenario runs account for every replicate") {
  const ScenarioRequest req =
      small_request("binary-balanced-ar1-a0.2-N50", 40, 1);
  const ScenarioResult res = run_scenario(req);
  CHECK(res.replicates == 40);
  CHECK(res.completed + res.failed == 40);
  CHECK(res.completed > 0);

  // each criterion's selections sum to the completed count
  REQUIRE(res.selection_counts.rows() ==
          static_cast<int>(res.criteria.size()));
  REQUIRE(res.selection_counts.cols() ==
          static_cast<int>(res.candidates.size()));
  for (int c = 0; c < res.selection_counts.rows(); ++c) {
    CHECK(res.selection_counts.row(c).sum() == res.completed);
  }

  // proportions live on the simplex
  const Eigen::MatrixXd prop = res.selection_proportions();
  for (int c = 0; c < prop.rows(); ++c) {
    CHECK(prop.row(c).sum() == doctest::Approx(1.0));
    for (int w = 0; w < prop.cols(); ++w) {
      CHECK(prop(c, w) >= 0.0);
      CHECK(prop(c, w) <= 1.0);
    }
  }

  // mse is finite and positive
  REQUIRE(res.mse.rows() == 3);
  for (int j = 0; j < res.mse.rows(); ++j) {
    for (int w = 0; w < res.mse.cols(); ++w) {
      CHECK(std::isfinite(res.mse(j, w)));
      CHECK(res.mse(j, w) > 0.0);
    }
  }
}

TEST_CASE("results are identical for any worker count") {
  const ScenarioResult serial =
      run_scenario(small_request("count-balanced-exch-a0.4-N50", 30, 1));
  const ScenarioResult threaded =
      run_scenario(small_request("count-balanced-exch-a0.4-N50", 30, 3));
  CHECK(serial.selection_counts == threaded.selection_counts);
  CHECK((serial.mse - threaded.mse).cwiseAbs().maxCoeff() == 0.0);
  CHECK(serial.completed == threaded.completed);
}

TEST_CASE("impossible fits fail the whole run loudly") {
  ScenarioRequest req = small_request("binary-balanced-ar1-a0.2-N50", 10, 1);
  req.fit_options.max_iter = 0;  // nothing can converge
  CHECK_THROWS_AS(run_scenario(req), ConvergenceError);
}

TEST_CASE("report config parses maps and rejects unknown keys") {
  std::map<std::string, std::string> kv;
  kv["tables"] = "all";
  kv["replicates"] = "25";
  kv["jobs"] = "2";
  const ReportConfig config = ReportConfig::from_map(kv);
  CHECK(config.tables == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(config.replicates == 25);
  CHECK(config.jobs == 2);

  kv["tables"] = "1,9";
  const ReportConfig two = ReportConfig::from_map(kv);
  CHECK(two.tables == std::vector<int>{1, 9});

  kv["tables"] = "10";
  CHECK_THROWS_AS(ReportConfig::from_map(kv), InputError);
  kv["tables"] = "1";
  kv["mystery"] = "x";
  CHECK_THROWS_AS(ReportConfig::from_map(kv), InputError);
}

TEST_CASE("replicate_report writes csvs and a summary") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "geepress_report_test";
  fs::remove_all(dir);

  ReportConfig config;
  config.tables = {9};
  config.cells = {"binary-balanced-ar1-a0.2-N50"};
  config.replicates = 12;
  config.seed = 5;
  config.jobs = 2;
  config.out_dir = dir.string();

  std::ostringstream progress;
  const ReportSummary summary = replicate_report(config, &progress);
  CHECK(summary.scenarios_run == 5);  // 4 reduced-table cells + 1 extra
  REQUIRE_FALSE(summary.files_written.empty());
  for (const std::string& f : summary.files_written) {
    CHECK(fs::exists(f));
  }
  CHECK(progress.str().find("binary-balanced-ar1-a0.2-N50") !=
        std::string::npos);

  // the selection table has the expected header and data shape
  std::ifstream sel(dir / "table9_selection.csv");
  REQUIRE(sel.good());
  std::string header;
  std::getline(sel, header);
  CHECK(header.find("cell") != std::string::npos);
  CHECK(header.find("criterion") != std::string::npos);
  CHECK(header.find("proportion") != std::string::npos);
  CHECK(header.find("reference") != std::string::npos);
  int rows = 0;
  for (std::string line; std::getline(sel, line);) {
    if (!line.empty()) ++rows;
  }
  // 4 cells x 7 criteria x 3 candidates
  CHECK(rows == 84);

  // the markdown summary mentions both observed and reference values
  std::ifstream md(dir / "summary.md");
  REQUIRE(md.good());
  std::stringstream buffer;
  buffer << md.rdbuf();
  CHECK(buffer.str().find("reference") != std::string::npos);

  fs::remove_all(dir);
}
