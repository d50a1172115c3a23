#pragma once

#include "symnorm/circle_grid.hpp"
#include "symnorm/gauge_norms.hpp"

namespace symnorm {

struct MembershipResult {
  bool member = false;
  double negative_magnitude = 0.0;  // max_{k<0} |f_hat(k)| relative to max_k |f_hat(k)|
};

/// True iff the negative-frequency coefficients vanish relative to the largest
/// coefficient, at the given tolerance.  The zero function is a member.
MembershipResult hardy_membership(const GridFunction& f, double tol = 1e-8);

/// Herglotz construction: h = exp(L + i conj(L)) with L = log phi, so |h| = phi
/// on the grid and the central value exp(mean L) is positive.  Samples of phi
/// at or below 1e-12 * max(phi) are clamped up before the log; the flag
/// records whether clamping distorted the input.  Throws if phi vanishes
/// identically or is not real and nonnegative.
GridFunction outer_from_modulus(const GridFunction& phi, bool* log_clamp_applied = nullptr);

struct FactorizationResult {
  GridFunction inner;
  GridFunction outer;
  double unimodularity_residual = 0.0;   // max | |inner(z_k)| - 1 |
  double reconstruction_residual = 0.0;  // max |inner*outer - f| / max |f|
  bool log_clamp_applied = false;
  bool success = false;                  // both residuals within tolerance
  double tolerance = 1e-6;
};

/// Riesz-Smirnov splitting f = inner * outer with outer = outer_from_modulus(|f|).
/// Inputs must pass hardy_membership at 1e-8 and must not vanish identically.
/// Zeros on or near the grid leave the residual gate open: the result reports
/// failure rather than an approximate factorization.
FactorizationResult inner_outer_factor(const GridFunction& f);

struct OuterTest {
  bool outer = false;
  double jensen_defect = 0.0;  // mean log|g| - log|g_hat(0)|; +inf when g_hat(0) = 0
};

/// Jensen-equality test for outer functions; the defect equals -log|B(0)| for
/// a Blaschke inner part B.  Requires hardy_membership(g).
OuterTest is_outer(const GridFunction& g, double tol = 1e-6);

struct OuterDivisionReport {
  double alpha_quotient = 0.0;
  bool member = false;
  double negative_magnitude = 0.0;
};

/// Division property of outer denominators: q = f/g stays in the Hardy class.
/// Rejects non-member inputs, non-outer g, and g with (near-)zeros on the grid.
OuterDivisionReport outer_division_check(const GridFunction& f, const GridFunction& g,
                                         const NormSpec& spec);

struct SubspaceComparison {
  int truncation = 0;
  double principal_angle = 0.0;  // largest principal angle, in [0, pi/2]
  GridFunction generator_inner;
};

/// Compares span{z^k f : k < K} against the shifted analytic span of the inner
/// factor of f; containment makes the largest principal angle vanish.
/// Requires K <= n/4 so the shifts stay inside the frequency band.
SubspaceComparison beurling_check(const GridFunction& f, int K);

struct MultiplierCertificate {
  double norm = 0.0;
  int index = 0;
  double certificate_residual = 0.0;
};

/// Multiplier norm of psi acting on (L^alpha, alpha): equals max |psi| with the
/// optimal singleton indicator as certificate; the ratio equality is verified
/// to 1e-12 internally.
MultiplierCertificate multiplier_norm(const GridFunction& psi, const NormSpec& spec);

struct SmirnovDecomposition {
  GridFunction u;  // inner factor of the denominator
  GridFunction v;  // inner factor of the numerator
  GridFunction a;  // outer, denominator side
  GridFunction b;  // outer, numerator side
  double partition_residual = 0.0;       // max | |a|+|b| - 1 |
  double reconstruction_residual = 0.0;  // relative error of vb/(ua) against f1/f2
};

/// Canonical-form quotient f1/f2 = vb/(ua) with |a| + |b| = 1 on the grid.
/// Inputs must be Hardy members; the construction needs |f1| + |f2| bounded
/// away from zero so the common outer scale exists.
SmirnovDecomposition smirnov_decompose(const GridFunction& f1, const GridFunction& f2);

}  // namespace symnorm
