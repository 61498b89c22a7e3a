#ifndef GEEPRESS_DATA_HPP
#define GEEPRESS_DATA_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "geepress/family.hpp"

namespace geepress {

/// All observations on one subject/cluster, ordered by measurement time.
struct Cluster {
  std::string id;
  Eigen::VectorXd y;          // responses, one per occasion
  Eigen::MatrixXd X;          // n_i x p design matrix
  std::vector<double> waves;  // strictly increasing measurement times

  int size() const { return static_cast<int>(y.size()); }
};

/// A longitudinal dataset: independent clusters sharing a design dimension
/// and a common grid of possible measurement times.
struct LongitudinalDataset {
  std::vector<Cluster> clusters;
  std::vector<double> wave_grid;  // ordered union of observed waves
  int p = 0;                      // number of regression coefficients

  int n_clusters() const { return static_cast<int>(clusters.size()); }
  int total_obs() const;
  int max_cluster_size() const;

  /// Recomputes the derived members: wave_grid as the sorted union of all
  /// cluster waves, and p from the first cluster's design width.
  void rebuild_wave_grid();

  /// Structural checks: consistent p, strictly increasing in-cluster waves
  /// that appear on the grid, finite values, responses legal for the given
  /// family, and more observations than coefficients.  Throws InputError.
  void validate(const Family& family) const;
};

/// Counts, for every pair of grid waves (s < t), how many clusters observe
/// both occasions.  Indexed [s][t] with s < t.
Eigen::MatrixXi wave_pair_counts(const LongitudinalDataset& data);

}  // namespace geepress

#endif  // GEEPRESS_DATA_HPP
