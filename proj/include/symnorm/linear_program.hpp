#pragma once

#include <Eigen/Dense>

namespace symnorm {

/// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so the slack basis is
/// feasible.  This covers every program the dual-norm machinery generates: the
/// norm-ball constraints have nonnegative rows and unit right-hand sides.
struct LpProblem {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

struct LpSolution {
  Eigen::VectorXd x;
  Eigen::VectorXd dual;  // multipliers y >= 0 with A'y >= c and b.y = value at optimality
  double value = 0.0;
  bool optimal = false;
  bool unbounded = false;
  int iterations = 0;
};

/// Dense tableau simplex with Dantzig pricing and a Bland fallback against
/// cycling on degenerate bases.  rhs_perturbation > 0 adds the deterministic
/// offsets rhs_perturbation * (i + 1) to b, the classical lexicographic cure
/// for structurally degenerate programs; callers re-certify the slightly
/// relaxed solution.
LpSolution solve_lp(const LpProblem& problem, double rhs_perturbation = 0.0);

}  // namespace symnorm
