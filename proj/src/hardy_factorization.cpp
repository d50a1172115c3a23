#include "symnorm/hardy_factorization.hpp"

#include "symnorm/fourier_kernels.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace symnorm {

namespace {

constexpr double kClampFraction = 1e-12;

void require_member(const GridFunction& f, const char* what) {
  const MembershipResult membership = hardy_membership(f);
  if (!membership.member) {
    throw std::invalid_argument(std::string(what) +
                                " is not a Hardy grid function (negative-frequency mass " +
                                std::to_string(membership.negative_magnitude) + ")");
  }
}

}  // namespace

MembershipResult hardy_membership(const GridFunction& f, double tol) {
  const FourierSeries series = to_fourier(f);
  double max_all = 0.0;
  double max_neg = 0.0;
  for (int k = series.min_freq(); k <= series.max_freq(); ++k) {
    const double mag = std::abs(series.at(k));
    max_all = std::max(max_all, mag);
    if (k < 0) max_neg = std::max(max_neg, mag);
  }
  if (max_all == 0.0) {
    return MembershipResult{true, 0.0};
  }
  const double relative = max_neg / max_all;
  return MembershipResult{relative <= tol, relative};
}

GridFunction outer_from_modulus(const GridFunction& phi, bool* log_clamp_applied) {
  const int n = phi.grid.n;
  Eigen::VectorXd values(n);
  double max_value = 0.0;
  for (int k = 0; k < n; ++k) {
    if (phi.samples[k].imag() != 0.0 || phi.samples[k].real() < 0.0) {
      throw std::invalid_argument("outer_from_modulus requires a real nonnegative modulus");
    }
    values[k] = phi.samples[k].real();
    max_value = std::max(max_value, values[k]);
  }
  if (max_value == 0.0) {
    throw std::invalid_argument("outer_from_modulus: modulus vanishes identically");
  }

  const double floor = kClampFraction * max_value;
  bool clamped = false;
  Eigen::VectorXcd log_values(n);
  for (int k = 0; k < n; ++k) {
    double v = values[k];
    if (v < floor) {
      v = floor;
      clamped = true;
    }
    log_values[k] = std::log(v);
  }
  if (log_clamp_applied) *log_clamp_applied = clamped;

  const GridFunction log_mod{phi.grid, std::move(log_values)};
  const GridFunction conj = conjugate_function(log_mod);
  Eigen::VectorXcd samples(n);
  for (int k = 0; k < n; ++k) {
    samples[k] = std::exp(Complex(log_mod.samples[k].real(), conj.samples[k].real()));
  }
  return GridFunction{phi.grid, std::move(samples)};
}

FactorizationResult inner_outer_factor(const GridFunction& f) {
  require_member(f, "inner_outer_factor input");
  const double max_f = norm_linf(f);
  if (max_f == 0.0) {
    throw std::invalid_argument("inner_outer_factor: input vanishes identically");
  }

  bool clamped = false;
  GridFunction modulus{f.grid, magnitudes(f).cast<Complex>()};
  GridFunction outer = outer_from_modulus(modulus, &clamped);

  const int n = f.grid.n;
  Eigen::VectorXcd inner_samples(n);
  for (int k = 0; k < n; ++k) {
    inner_samples[k] = f.samples[k] / outer.samples[k];
  }
  GridFunction inner{f.grid, std::move(inner_samples)};

  FactorizationResult result;
  result.unimodularity_residual = (magnitudes(inner).array() - 1.0).abs().maxCoeff();
  Eigen::VectorXcd reconstruction = inner.samples.cwiseProduct(outer.samples) - f.samples;
  result.reconstruction_residual = reconstruction.cwiseAbs().maxCoeff() / max_f;
  result.log_clamp_applied = clamped;
  result.success = result.unimodularity_residual <= result.tolerance &&
                   result.reconstruction_residual <= result.tolerance;
  result.inner = std::move(inner);
  result.outer = std::move(outer);
  return result;
}

OuterTest is_outer(const GridFunction& g, double tol) {
  require_member(g, "is_outer input");
  const int n = g.grid.n;
  const Complex central = g.samples.sum() / static_cast<double>(n);
  if (std::abs(central) == 0.0) {
    return OuterTest{false, std::numeric_limits<double>::infinity()};
  }
  const double max_g = norm_linf(g);
  if (max_g == 0.0) {
    return OuterTest{false, std::numeric_limits<double>::infinity()};
  }
  const double floor = kClampFraction * max_g;
  double mean_log = 0.0;
  for (int k = 0; k < n; ++k) {
    mean_log += std::log(std::max(std::abs(g.samples[k]), floor));
  }
  mean_log /= static_cast<double>(n);
  const double defect = mean_log - std::log(std::abs(central));
  return OuterTest{defect <= tol, defect};
}

OuterDivisionReport outer_division_check(const GridFunction& f, const GridFunction& g,
                                         const NormSpec& spec) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("grid mismatch in outer_division_check");
  require_member(f, "outer_division_check numerator");
  require_member(g, "outer_division_check denominator");
  const double max_g = norm_linf(g);
  const Eigen::VectorXd mag_g = magnitudes(g);
  if (max_g == 0.0 || mag_g.minCoeff() < kClampFraction * max_g) {
    throw std::invalid_argument("outer_division_check: denominator has grid zeros");
  }
  const OuterTest outer_test = is_outer(g);
  if (!outer_test.outer) {
    throw std::invalid_argument("outer_division_check: denominator is not outer (defect " +
                                std::to_string(outer_test.jensen_defect) + ")");
  }

  GridFunction quotient{f.grid, f.samples.cwiseQuotient(g.samples)};
  const MembershipResult membership = hardy_membership(quotient);
  return OuterDivisionReport{eval_norm(spec, quotient), membership.member,
                             membership.negative_magnitude};
}

SubspaceComparison beurling_check(const GridFunction& f, int K) {
  const int n = f.grid.n;
  if (K < 1 || K > n / 4) {
    throw std::invalid_argument("beurling_check truncation must satisfy 1 <= K <= n/4");
  }
  FactorizationResult factorization = inner_outer_factor(f);
  if (!factorization.success) {
    throw std::runtime_error("beurling_check: factorization residuals exceed tolerance (" +
                             std::to_string(factorization.unimodularity_residual) + ", " +
                             std::to_string(factorization.reconstruction_residual) + ")");
  }
  const GridFunction& phi = factorization.inner;

  auto shifted_coeffs = [n](const GridFunction& base, int shifts) {
    Eigen::MatrixXcd columns(n, shifts);
    GridFunction current = base;
    for (int k = 0; k < shifts; ++k) {
      columns.col(k) = to_fourier(current).coeffs;
      Eigen::VectorXcd next(n);
      for (int j = 0; j < n; ++j) next[j] = current.samples[j] * grid_point(base.grid, j);
      current = GridFunction{base.grid, std::move(next)};
    }
    return columns;
  };

  // The outer factor occupies at most the lower quarter band, so K + n/4
  // shifts of the inner factor carry span{z^k f} without wraparound.
  const int J = std::min(K + n / 4, n / 2);
  const Eigen::MatrixXcd A = shifted_coeffs(f, K);
  const Eigen::MatrixXcd B = shifted_coeffs(phi, J);

  const Eigen::MatrixXcd QA = Eigen::HouseholderQR<Eigen::MatrixXcd>(A)
                                  .householderQ() *
                              Eigen::MatrixXcd::Identity(n, K);
  const Eigen::MatrixXcd QB = Eigen::HouseholderQR<Eigen::MatrixXcd>(B)
                                  .householderQ() *
                              Eigen::MatrixXcd::Identity(n, J);

  const Eigen::MatrixXcd residual = QA - QB * (QB.adjoint() * QA);
  const double sine = residual.jacobiSvd().singularValues().maxCoeff();
  SubspaceComparison comparison;
  comparison.truncation = K;
  comparison.principal_angle = std::asin(std::min(1.0, std::max(0.0, sine)));
  comparison.generator_inner = phi;
  return comparison;
}

MultiplierCertificate multiplier_norm(const GridFunction& psi, const NormSpec& spec) {
  const int n = psi.grid.n;
  const Eigen::VectorXd mag = magnitudes(psi);
  int best = 0;
  for (int k = 1; k < n; ++k) {
    if (mag[k] > mag[best]) best = k;
  }
  const double norm = mag[best];

  const GridFunction unit = indicator(psi.grid, best);
  const double attained = eval_norm(spec, pointwise_product(psi, unit));
  const double expected = norm * eval_norm(spec, unit);
  const double residual = std::abs(attained - expected);
  if (residual > 1e-12 * std::max(1.0, expected)) {
    throw std::logic_error("multiplier certificate mismatch: " + std::to_string(residual));
  }
  return MultiplierCertificate{norm, best, residual};
}

SmirnovDecomposition smirnov_decompose(const GridFunction& f1, const GridFunction& f2) {
  if (!(f1.grid == f2.grid)) throw std::invalid_argument("grid mismatch in smirnov_decompose");
  require_member(f1, "smirnov numerator");
  require_member(f2, "smirnov denominator");
  if (norm_linf(f2) == 0.0) {
    throw std::invalid_argument("smirnov_decompose: denominator vanishes identically");
  }

  const Eigen::VectorXd total = magnitudes(f1) + magnitudes(f2);
  const double max_total = total.maxCoeff();
  if (max_total == 0.0 || total.minCoeff() < kClampFraction * max_total) {
    throw std::invalid_argument(
        "smirnov_decompose: |f1| + |f2| vanishes on the grid, no common outer scale");
  }

  FactorizationResult numerator = inner_outer_factor(f1);
  FactorizationResult denominator = inner_outer_factor(f2);
  GridFunction psi = outer_from_modulus(GridFunction{f1.grid, total.cast<Complex>()});

  SmirnovDecomposition result;
  result.v = numerator.inner;
  result.u = denominator.inner;
  result.b = GridFunction{f1.grid, numerator.outer.samples.cwiseQuotient(psi.samples)};
  result.a = GridFunction{f1.grid, denominator.outer.samples.cwiseQuotient(psi.samples)};

  result.partition_residual =
      (magnitudes(result.a) + magnitudes(result.b) - Eigen::VectorXd::Ones(f1.grid.n))
          .cwiseAbs()
          .maxCoeff();

  // Reconstruction vb/(ua) against the raw quotient f1/f2, at points where the
  // denominator carries weight (the quotient is unbounded elsewhere).
  const int n = f1.grid.n;
  const double denom_floor = kClampFraction * norm_linf(f2);
  double worst = 0.0;
  double scale = 0.0;
  for (int k = 0; k < n; ++k) {
    if (std::abs(f2.samples[k]) < denom_floor) continue;
    const Complex rhs = f1.samples[k] / f2.samples[k];
    const Complex lhs = result.v.samples[k] * result.b.samples[k] /
                        (result.u.samples[k] * result.a.samples[k]);
    worst = std::max(worst, std::abs(lhs - rhs));
    scale = std::max(scale, std::abs(rhs));
  }
  result.reconstruction_residual = scale > 0.0 ? worst / scale : worst;
  return result;
}

}  // namespace symnorm
