#pragma once

#include <Eigen/Dense>

#include <optional>

namespace hybridrange::detail {

struct LpFeasibility {
  double infeasibility = 0.0;  // optimal L1 residual of the equality system
  Eigen::VectorXd solution;    // basic solution for the original variables
};

/// Phase-1 simplex for the system A w = b, w >= 0. Minimizes the sum of
/// artificial variables with Bland's rule, so the pivot sequence is
/// deterministic and finite. The returned infeasibility is ~0 iff a
/// nonnegative solution exists.
LpFeasibility lp_feasible(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

}  // namespace hybridrange::detail
