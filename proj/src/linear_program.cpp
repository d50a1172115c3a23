#include "symnorm/linear_program.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace symnorm {

namespace {
constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-10;
}  // namespace

LpSolution solve_lp(const LpProblem& problem, double rhs_perturbation) {
  const int m = static_cast<int>(problem.A.rows());
  const int n = static_cast<int>(problem.A.cols());
  if (problem.b.size() != m || problem.c.size() != n) {
    throw std::invalid_argument("inconsistent LP dimensions");
  }
  if (m > 0 && problem.b.minCoeff() < 0.0) {
    throw std::invalid_argument("solve_lp requires b >= 0 (slack basis must be feasible)");
  }

  // Columns: n structural, m slack, then the rhs.
  Eigen::MatrixXd tab = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  tab.block(0, 0, m, n) = problem.A;
  tab.block(0, n, m, m) = Eigen::MatrixXd::Identity(m, m);
  tab.block(0, n + m, m, 1) = problem.b;
  for (int i = 0; i < m; ++i) {
    tab(i, n + m) += rhs_perturbation * static_cast<double>(i + 1);
  }
  tab.block(m, 0, 1, n) = problem.c.transpose();

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  LpSolution sol;
  const int max_iterations = 500 * (m + n) + 2000;
  const int bland_after = 5 * (m + n) + 50;

  for (sol.iterations = 0; sol.iterations < max_iterations; ++sol.iterations) {
    const bool bland = sol.iterations >= bland_after;

    int entering = -1;
    double best_cost = kCostTol;
    for (int j = 0; j < n + m; ++j) {
      const double cost = tab(m, j);
      if (cost > kCostTol) {
        if (bland) {
          entering = j;
          break;
        }
        if (cost > best_cost) {
          best_cost = cost;
          entering = j;
        }
      }
    }
    if (entering < 0) {
      sol.optimal = true;
      break;
    }

    // Ratio test in two passes: exact minimum first, then the lowest basis
    // index among the (near-)ties, which is what keeps Bland's rule sound.
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      const double a = tab(i, entering);
      if (a > kPivotTol) {
        min_ratio = std::min(min_ratio, tab(i, n + m) / a);
      }
    }
    if (!std::isfinite(min_ratio)) {
      sol.unbounded = true;
      break;
    }
    int leaving = -1;
    const double tie = min_ratio + 1e-12 * (1.0 + std::abs(min_ratio));
    for (int i = 0; i < m; ++i) {
      const double a = tab(i, entering);
      if (a > kPivotTol && tab(i, n + m) / a <= tie) {
        if (leaving < 0 || basis[i] < basis[leaving]) leaving = i;
      }
    }

    tab.row(leaving) /= tab(leaving, entering);
    for (int i = 0; i <= m; ++i) {
      if (i == leaving) continue;
      const double factor = tab(i, entering);
      if (factor != 0.0) tab.row(i) -= factor * tab.row(leaving);
    }
    basis[leaving] = entering;
  }

  sol.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) sol.x[basis[i]] = tab(i, n + m);
  }
  sol.value = problem.c.dot(sol.x);
  // At optimality the slack columns of the cost row carry the (negated)
  // dual multipliers; they certify the value independently via b.y.
  sol.dual = -tab.row(m).segment(n, m).transpose();
  return sol;
}

}  // namespace symnorm
