#ifndef GEEPRESS_INFERENCE_HPP
#define GEEPRESS_INFERENCE_HPP

#include <Eigen/Dense>

#include "geepress/gee.hpp"

namespace geepress {

/// Linear hypothesis C beta = r with C (q x p) of full row rank.
struct LinearHypothesis {
  Eigen::MatrixXd C;
  Eigen::VectorXd r;  // empty means zero

  static LinearHypothesis zero_coefficients(const std::vector<int>& indices,
                                            int p);
};

enum class TestKind { Wald, Score };

struct TestResult {
  TestKind kind = TestKind::Wald;
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
};

/// Robust Wald test of C beta = r using the sandwich covariance.
TestResult wald_test(const GeeFit& fit, const LinearHypothesis& hypothesis);

/// Generalized (empirical-covariance) score test: refits under the
/// constraint C beta = r and tests the unconstrained score components with
/// a robust covariance, so no working-correlation correctness is assumed.
/// Hypotheses whose rows each pin a single coefficient are handled by
/// dropping the corresponding design columns (with an offset for nonzero r);
/// general hypotheses are rotated into constrained coordinates through a
/// null-space basis of C.
TestResult score_test(const LongitudinalDataset& data, const Family& family,
                      CorrelationKind kind, const LinearHypothesis& hypothesis,
                      const FitOptions& options = {});

}  // namespace geepress

#endif  // GEEPRESS_INFERENCE_HPP
