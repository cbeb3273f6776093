#include "lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hybridrange::detail {

LpFeasibility lp_feasible(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  if (b.size() != rows) throw std::invalid_argument("lp_feasible: shape mismatch");

  // Tableau [A | I | b] with b >= 0 and an artificial basis.
  Eigen::MatrixXd t(rows, cols + rows + 1);
  t.leftCols(cols) = a;
  t.middleCols(cols, rows) = Eigen::MatrixXd::Identity(rows, rows);
  t.col(cols + rows) = b;
  for (Eigen::Index i = 0; i < rows; ++i)
    if (t(i, cols + rows) < 0.0) t.row(i) = -t.row(i);

  std::vector<Eigen::Index> basis(static_cast<size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) basis[static_cast<size_t>(i)] = cols + i;

  // Reduced cost row for the phase-1 objective (sum of artificials).
  Eigen::RowVectorXd cost = -t.colwise().sum();
  for (Eigen::Index j = cols; j < cols + rows; ++j) cost(j) = 0.0;
  double objective = t.col(cols + rows).sum();

  const double eps = 1e-11;
  const long max_pivots = 50L * static_cast<long>(rows + cols + 4);
  for (long iter = 0; iter < max_pivots; ++iter) {
    // Bland: entering = lowest-index original column with negative reduced cost.
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (cost(j) < -eps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (t(i, enter) > eps) {
        double ratio = t(i, cols + rows) / t(i, enter);
        if (ratio < best_ratio - 1e-15 ||
            (std::abs(ratio - best_ratio) <= 1e-15 && leave >= 0 &&
             basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) break;  // unbounded cannot happen for phase 1; bail safely

    t.row(leave) /= t(leave, enter);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != leave && std::abs(t(i, enter)) > 0.0)
        t.row(i) -= t(i, enter) * t.row(leave);
    cost -= cost(enter) * t.row(leave);
    basis[static_cast<size_t>(leave)] = enter;

    objective = 0.0;
    for (Eigen::Index i = 0; i < rows; ++i)
      if (basis[static_cast<size_t>(i)] >= cols) objective += t(i, cols + rows);
  }

  LpFeasibility out;
  out.infeasibility = std::max(objective, 0.0);
  out.solution = Eigen::VectorXd::Zero(cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    if (basis[static_cast<size_t>(i)] < cols)
      out.solution(basis[static_cast<size_t>(i)]) = t(i, cols + rows);
  return out;
}

}  // namespace hybridrange::detail
