#pragma once

#include "symnorm/circle_grid.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace symnorm {

/// PermutationWeighted, Lp, KyFan, Marcinkiewicz and their Combo/SupFamily closures
/// are invariant under every permutation of the sample indices; RotationWeighted is
/// invariant only under the cyclic group.
enum class SymmetryClass { Rotational, FullySymmetric };

enum class NormKind { Lp, KyFan, Marcinkiewicz, Combo, SupFamily, RotationWeighted, PermutationWeighted };

/// Composable description of a rotationally symmetric gauge norm.  Every spec
/// evaluates to 1 on the constant function 1; the factories validate the
/// normalizations that guarantee it.
class NormSpec {
 public:
  struct Lp {
    double p;  // 1 <= p <= inf
  };
  struct KyFan {
    double t;  // (0, 1]
  };
  struct Marcinkiewicz {
    Eigen::VectorXd u;  // samples u(k/n_u), k = 1..n_u; 0 < u <= 1, max(u) = 1
  };
  struct Combo {
    std::vector<double> weights;  // positive, sum 1
    std::vector<NormSpec> children;
  };
  struct SupFamily {
    std::vector<NormSpec> children;
  };
  struct RotationWeighted {
    GridFunction h;  // nonnegative, mean 1
  };
  struct PermutationWeighted {
    GridFunction h;  // nonnegative, mean 1
  };

  static NormSpec lp(double p);
  static NormSpec lp_inf();
  static NormSpec ky_fan(double t);
  static NormSpec marcinkiewicz(Eigen::VectorXd u);
  static NormSpec combo(std::vector<double> weights, std::vector<NormSpec> children);
  static NormSpec sup_family(std::vector<NormSpec> children);
  static NormSpec rotation_weighted(GridFunction h);
  static NormSpec permutation_weighted(GridFunction h);

  NormKind kind() const;

  template <typename T>
  const T& as() const {
    return std::get<T>(*node_);
  }

  /// Short stable label used in reports, e.g. "lp(2)" or "kyfan(0.5)".
  std::string label() const;

 private:
  using Node =
      std::variant<Lp, KyFan, Marcinkiewicz, Combo, SupFamily, RotationWeighted, PermutationWeighted>;
  explicit NormSpec(Node node);

  std::shared_ptr<const Node> node_;
};

SymmetryClass symmetry_class(const NormSpec& spec);

/// alpha(f) under the discrete semantics.  Complex samples are reduced through
/// their magnitudes first (gauge property).
double eval_norm(const NormSpec& spec, const GridFunction& f);

/// alpha evaluated on a nonincreasing nonnegative profile of length n.  For
/// fully symmetric specs this agrees with eval_norm on any function whose
/// rearrangement is the profile; RotationWeighted treats the profile as samples.
double eval_norm_profile(const NormSpec& spec, const Eigen::VectorXd& profile);

/// min over nonempty index sets E of alpha(chi_E); equals the min over the n
/// singleton indicators by monotonicity.
double continuity_modulus(const NormSpec& spec, const Grid& grid);

/// The decomposition alpha = (1-t) beta + t ||.||_inf with t the continuity
/// modulus; beta is again a gauge norm with beta(1) = 1.
struct ContinuityDecomposition {
  double t;
  std::function<double(const GridFunction&)> beta;
};

/// Requires a fully symmetric spec with continuity modulus < 1; throws a
/// degenerate-decomposition error when alpha is equivalent to the sup norm on
/// the grid (t = 1).
ContinuityDecomposition decompose_continuous(const NormSpec& spec, const Grid& grid);

struct PropertyCheck {
  std::string property;
  bool pass = false;
  double worst_slack = 0.0;  // min over trials of (rhs - lhs); >= -tol passes
  int trials = 0;
};

struct AxiomReport {
  std::vector<PropertyCheck> checks;
  bool all_pass() const;
};

/// Randomized checks of the gauge-norm axioms and their consequences:
/// monotonicity, the multiplier bound alpha(fg) <= alpha(f)||g||_inf, the
/// sandwich ||f||_1 <= alpha(f) <= ||f||_inf, triangle inequality, homogeneity,
/// symmetry-class invariance, and the shrinking-indicator continuity proxy.
/// Failures are reported, not thrown.
AxiomReport verify_axioms(const NormSpec& spec, const Grid& grid, int trials, std::uint64_t seed);

/// Same checks against an arbitrary norm evaluator (used to validate dual
/// norms).  invariance_tol is the slack allowed on the symmetry-invariance
/// check; eval_norm itself achieves bitwise invariance but LP-backed
/// evaluators only reach rounding accuracy.
AxiomReport verify_axioms_on(const std::function<double(const GridFunction&)>& alpha,
                             SymmetryClass symmetry, const Grid& grid, int trials,
                             std::uint64_t seed, double invariance_tol = 1e-12);

}  // namespace symnorm
