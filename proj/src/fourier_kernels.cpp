#include "symnorm/fourier_kernels.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <stdexcept>

namespace symnorm {

namespace {

// FFT bin m (0..n-1) holds frequency m for m < n/2 and m - n otherwise;
// reorder into ascending frequency -n/2..n/2-1.
Eigen::VectorXcd bins_to_ascending(const Eigen::VectorXcd& bins) {
  const int n = static_cast<int>(bins.size());
  Eigen::VectorXcd out(n);
  for (int m = 0; m < n; ++m) {
    const int freq = m < n / 2 ? m : m - n;
    out[freq + n / 2] = bins[m];
  }
  return out;
}

Eigen::VectorXcd ascending_to_bins(const Eigen::VectorXcd& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  Eigen::VectorXcd bins(n);
  for (int m = 0; m < n; ++m) {
    const int freq = m < n / 2 ? m : m - n;
    bins[m] = coeffs[freq + n / 2];
  }
  return bins;
}

}  // namespace

FourierSeries to_fourier(const GridFunction& f) {
  Eigen::FFT<double> fft;
  Eigen::VectorXcd bins;
  Eigen::VectorXcd samples = f.samples;
  fft.fwd(bins, samples);
  bins /= static_cast<double>(f.grid.n);
  return FourierSeries{f.grid, bins_to_ascending(bins)};
}

GridFunction from_fourier(const FourierSeries& series) {
  Eigen::FFT<double> fft;
  Eigen::VectorXcd bins = ascending_to_bins(series.coeffs);
  bins *= static_cast<double>(series.grid.n);
  Eigen::VectorXcd samples;
  fft.inv(samples, bins);
  return GridFunction{series.grid, std::move(samples)};
}

KernelSpec KernelSpec::fejer(int order) {
  if (order < 0) throw std::invalid_argument("Fejer order must be nonnegative");
  return KernelSpec{Kind::Fejer, order, 0.0};
}

KernelSpec KernelSpec::poisson(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("Poisson radius must lie in [0, 1)");
  return KernelSpec{Kind::Poisson, 0, r};
}

GridFunction kernel(const KernelSpec& spec, const Grid& grid) {
  const int n = grid.n;
  if (spec.kind == KernelSpec::Kind::Fejer) {
    const int m = spec.order;
    if (m >= n / 2) {
      throw std::invalid_argument("Fejer order " + std::to_string(m) +
                                  " aliases on a grid of size " + std::to_string(n));
    }
    // Closed form (1/(m+1)) (sin((m+1)t/2) / sin(t/2))^2: nonnegative by
    // construction, and band-limited below n/2 so the samples are exact.
    Eigen::VectorXcd samples(n);
    for (int k = 0; k < n; ++k) {
      if (k == 0) {
        samples[k] = static_cast<double>(m + 1);
        continue;
      }
      const double half = M_PI * static_cast<double>(k) / static_cast<double>(n);
      const double num = std::sin(static_cast<double>(m + 1) * half);
      const double den = std::sin(half);
      samples[k] = num * num / (den * den) / static_cast<double>(m + 1);
    }
    return GridFunction{grid, std::move(samples)};
  }

  // Poisson: coefficients r^{|k|} truncated to the band |k| < n/2.  The k = 0
  // coefficient is exactly 1, so the mean axiom holds despite truncation.
  FourierSeries series{grid, Eigen::VectorXcd::Zero(n)};
  for (int k = -(n / 2 - 1); k <= n / 2 - 1; ++k) {
    series.at(k) = std::pow(spec.r, std::abs(k));
  }
  GridFunction out = from_fourier(series);
  for (int k = 0; k < n; ++k) out.samples[k] = out.samples[k].real();
  return out;
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("grid mismatch in convolution");
  FourierSeries fs = to_fourier(f);
  const FourierSeries gs = to_fourier(g);
  fs.coeffs = fs.coeffs.cwiseProduct(gs.coeffs);
  return from_fourier(fs);
}

GridFunction cesaro_mean(const GridFunction& f, int m) {
  return convolve(f, kernel(KernelSpec::fejer(m), f.grid));
}

GridFunction poisson_extension(const GridFunction& f, double r) {
  return convolve(f, kernel(KernelSpec::poisson(r), f.grid));
}

GridFunction riesz_project(const GridFunction& f) {
  FourierSeries series = to_fourier(f);
  for (int k = series.min_freq(); k < 0; ++k) series.at(k) = 0.0;
  return from_fourier(series);
}

GridFunction conjugate_function(const GridFunction& real_function) {
  const int n = real_function.grid.n;
  for (int k = 0; k < n; ++k) {
    if (real_function.samples[k].imag() != 0.0) {
      throw std::invalid_argument("conjugate_function requires a real-valued input");
    }
  }
  FourierSeries series = to_fourier(real_function);
  const Complex minus_i(0.0, -1.0);
  for (int k = series.min_freq(); k <= series.max_freq(); ++k) {
    if (k == 0 || k == series.min_freq()) {
      series.at(k) = 0.0;
    } else {
      series.at(k) *= k > 0 ? minus_i : -minus_i;
    }
  }
  GridFunction out = from_fourier(series);
  // The multiplier is conjugate-symmetric on the paired band, so the result is
  // real; drop the rounding-level imaginary part.
  for (int k = 0; k < n; ++k) out.samples[k] = out.samples[k].real();
  return out;
}

}  // namespace symnorm
