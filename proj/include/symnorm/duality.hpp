#pragma once

#include "symnorm/circle_grid.hpp"
#include "symnorm/gauge_norms.hpp"
#include "symnorm/linear_program.hpp"

#include <cstdint>

namespace symnorm {

/// (1/n) sum f(z_k) g(z_k); the bilinear pairing behind the dual norm.
Complex pairing(const GridFunction& f, const GridFunction& g);

enum class DualMethod { ClosedForm, LP, ProjectedGradient };

/// alpha'(f) = sup { (1/n) sum |f h| : alpha(h) <= 1 } together with the
/// maximizing h.  The value is always the pairing achieved by the returned
/// witness, so it is a certified lower bound; gap is the certified (LP,
/// closed form) or estimated (projected gradient) distance to the supremum.
struct DualEvaluation {
  double value = 0.0;
  GridFunction witness;
  double gap = 0.0;
  DualMethod method = DualMethod::ClosedForm;

  bool converged(double tol = 1e-8) const { return gap <= tol; }
};

/// True when the spec's unit ball restricted to nonincreasing profiles is a
/// polytope handled exactly by the LP backend (Ky Fan, Marcinkiewicz,
/// L1/Linf, permutation weights, and their sup/combo closures).
bool lp_representable(const NormSpec& spec);

DualEvaluation dual_norm(const NormSpec& spec, const GridFunction& f);

/// The multi-start projected-gradient route, regardless of whether an exact
/// backend exists.  Used to cross-validate the LP backend: it maximizes the
/// same pairing by an independent method.
DualEvaluation dual_norm_best_effort(const NormSpec& spec, const GridFunction& f);

/// The linear program whose optimum is alpha'(f) for profile-polyhedral
/// specs, in the difference variables d_j = g_j - g_{j+1} (plus any combo
/// bound variables).  Exposed so optimality can be certified externally
/// through the multiplier certificate b.y.
LpProblem dual_norm_profile_program(const NormSpec& spec, const GridFunction& f);

struct BidualCheck {
  double alpha = 0.0;
  double alpha_bidual = 0.0;
  double relative_gap = 0.0;
};

/// Runs the dual machinery twice: alpha''(f) maximizes the pairing over the
/// alpha'-ball, whose membership test is dual_norm itself.  Polyhedral specs
/// use an exact cutting-plane loop; Lp uses the conjugate exponent.
BidualCheck bidual_check(const NormSpec& spec, const GridFunction& f);

/// Lower bound on alpha(f) for Hardy functions f by pairing against trial
/// outer functions h = outer_from_modulus((phi + eps)/(1 + eps)) built from
/// random nonnegative simple phi with alpha'(phi) <= 1.  Never exceeds
/// alpha(f) beyond rounding; approaches it as trials grow.
double hardy_lower_bound(const NormSpec& spec, const GridFunction& f, int trials,
                         std::uint64_t seed = 20080514);

}  // namespace symnorm
