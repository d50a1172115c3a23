#pragma once

#include "symnorm/circle_grid.hpp"

namespace symnorm {

/// Coefficient vector indexed by frequency k in {-n/2, ..., n/2 - 1}; storage
/// index i holds frequency i - n/2.  to_fourier carries the 1/n measure on the
/// analysis side, so coefficients are the discrete integrals (1/n) sum f(z_k) z_k^{-m}.
struct FourierSeries {
  Grid grid;
  Eigen::VectorXcd coeffs;

  int min_freq() const { return -grid.n / 2; }
  int max_freq() const { return grid.n / 2 - 1; }
  Complex at(int freq) const { return coeffs[freq + grid.n / 2]; }
  Complex& at(int freq) { return coeffs[freq + grid.n / 2]; }
};

FourierSeries to_fourier(const GridFunction& f);
GridFunction from_fourier(const FourierSeries& series);

/// Fejer(order m) or Poisson(radius r) approximate-identity kernels: real,
/// nonnegative samples with mean exactly 1 (Poisson up to the documented
/// band truncation).
struct KernelSpec {
  enum class Kind { Fejer, Poisson };
  Kind kind;
  int order = 0;   // Fejer: 0 <= order < n/2
  double r = 0.0;  // Poisson: 0 <= r < 1

  static KernelSpec fejer(int order);
  static KernelSpec poisson(double r);
};

GridFunction kernel(const KernelSpec& spec, const Grid& grid);

/// Circular convolution with the 1/n measure: (f*g)(z_k) = (1/n) sum_j f(z_{k-j}) g(z_j),
/// computed by transform multiplication.  The discrete identity element has
/// samples (n, 0, ..., 0).
GridFunction convolve(const GridFunction& f, const GridFunction& g);

/// f * Fejer(m): coefficients scaled by (m+1-|k|)/(m+1) for |k| <= m, zero beyond.
GridFunction cesaro_mean(const GridFunction& f, int m);

/// f * Poisson(r): coefficients scaled by r^{|k|}.
GridFunction poisson_extension(const GridFunction& f, double r);

/// Zeroes the coefficients at negative frequencies.
GridFunction riesz_project(const GridFunction& f);

/// Boundary harmonic conjugate of a real function: the -i sgn(k) Fourier
/// multiplier, annihilating k = 0 and the unpaired frequency k = -n/2 so a
/// real input maps to a real output exactly.
GridFunction conjugate_function(const GridFunction& real_function);

}  // namespace symnorm
