#include "geepress/data.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "geepress/correlation.hpp"
#include "geepress/errors.hpp"

namespace geepress {

int LongitudinalDataset::total_obs() const {
  int n = 0;
  for (const auto& c : clusters) n += c.size();
  return n;
}

int LongitudinalDataset::max_cluster_size() const {
  int n = 0;
  for (const auto& c : clusters) n = std::max(n, c.size());
  return n;
}

void LongitudinalDataset::rebuild_wave_grid() {
  std::set<double> grid;
  for (const auto& c : clusters) {
    grid.insert(c.waves.begin(), c.waves.end());
  }
  wave_grid.assign(grid.begin(), grid.end());
  if (!clusters.empty()) p = static_cast<int>(clusters.front().X.cols());
}

void LongitudinalDataset::validate(const Family& family) const {
  if (clusters.empty()) {
    throw InputError("dataset contains no clusters");
  }
  if (p <= 0) {
    throw InputError("dataset has a non-positive coefficient dimension");
  }
  for (const auto& c : clusters) {
    if (c.size() == 0) {
      throw InputError("cluster '" + c.id + "' has no observations");
    }
    if (c.X.rows() != c.y.size() ||
        c.waves.size() != static_cast<std::size_t>(c.y.size())) {
      throw InputError("cluster '" + c.id +
                       "' has mismatched response/design/wave lengths");
    }
    if (c.X.cols() != p) {
      std::ostringstream msg;
      msg << "cluster '" << c.id << "' has " << c.X.cols()
          << " covariate columns, expected " << p;
      throw InputError(msg.str());
    }
    if (!c.X.allFinite() || !c.y.allFinite()) {
      throw InputError("cluster '" + c.id + "' contains non-finite values");
    }
    for (int t = 0; t < c.size(); ++t) {
      if (!std::isfinite(c.waves[t])) {
        throw InputError("cluster '" + c.id + "' has a non-finite wave");
      }
      if (t > 0 && !(c.waves[t] > c.waves[t - 1])) {
        throw InputError("cluster '" + c.id +
                         "' waves are not strictly increasing");
      }
      if (!family.valid_response(c.y[t])) {
        std::ostringstream msg;
        msg << "cluster '" << c.id << "' response " << c.y[t]
            << " is invalid for the " << family.name() << " family";
        throw InputError(msg.str());
      }
      if (std::find(wave_grid.begin(), wave_grid.end(), c.waves[t]) ==
          wave_grid.end()) {
        std::ostringstream msg;
        msg << "cluster '" << c.id << "' wave " << c.waves[t]
            << " is not on the dataset wave grid";
        throw InputError(msg.str());
      }
    }
  }
  if (total_obs() <= p) {
    throw InputError("dataset has no more observations than coefficients");
  }
}

Eigen::MatrixXi wave_pair_counts(const LongitudinalDataset& data) {
  const int T = static_cast<int>(data.wave_grid.size());
  Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(T, T);
  for (const auto& c : data.clusters) {
    std::vector<int> idx(c.waves.size());
    for (std::size_t j = 0; j < c.waves.size(); ++j) {
      idx[j] = wave_index(data.wave_grid, c.waves[j]);
    }
    for (std::size_t j = 0; j < idx.size(); ++j) {
      for (std::size_t k = j + 1; k < idx.size(); ++k) {
        const int a = std::min(idx[j], idx[k]);
        const int b = std::max(idx[j], idx[k]);
        counts(a, b) += 1;
      }
    }
  }
  return counts;
}

}  // namespace geepress
