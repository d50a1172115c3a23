#include "symnorm/circle_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace symnorm {

bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

Grid make_grid(int n) {
  if (n < 2 || !is_power_of_two(n)) {
    throw std::invalid_argument("grid size must be a power of two >= 2, got " +
                                std::to_string(n));
  }
  return Grid{n};
}

Complex grid_point(const Grid& grid, int k) {
  const double theta = 2.0 * M_PI * static_cast<double>(((k % grid.n) + grid.n) % grid.n) /
                       static_cast<double>(grid.n);
  return Complex(std::cos(theta), std::sin(theta));
}

namespace {

void check_finite(const Eigen::VectorXcd& samples) {
  for (Eigen::Index i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i].real()) || !std::isfinite(samples[i].imag())) {
      throw std::invalid_argument("grid function samples must be finite");
    }
  }
}

}  // namespace

GridFunction make_grid_function(const Grid& grid, Eigen::VectorXcd samples) {
  if (samples.size() != grid.n) {
    throw std::invalid_argument("sample count " + std::to_string(samples.size()) +
                                " does not match grid size " + std::to_string(grid.n));
  }
  check_finite(samples);
  return GridFunction{grid, std::move(samples)};
}

GridFunction make_grid_function(const Grid& grid, const Eigen::VectorXd& real_samples) {
  Eigen::VectorXcd samples = real_samples.cast<Complex>();
  return make_grid_function(grid, std::move(samples));
}

GridFunction constant_function(const Grid& grid, Complex value) {
  return GridFunction{grid, Eigen::VectorXcd::Constant(grid.n, value)};
}

GridFunction indicator(const Grid& grid, int index) {
  Eigen::VectorXcd samples = Eigen::VectorXcd::Zero(grid.n);
  samples[((index % grid.n) + grid.n) % grid.n] = 1.0;
  return GridFunction{grid, std::move(samples)};
}

GridFunction indicator(const Grid& grid, const std::vector<int>& indices) {
  Eigen::VectorXcd samples = Eigen::VectorXcd::Zero(grid.n);
  for (int index : indices) {
    samples[((index % grid.n) + grid.n) % grid.n] = 1.0;
  }
  return GridFunction{grid, std::move(samples)};
}

GridFunction monomial(const Grid& grid, int power) {
  Eigen::VectorXcd samples(grid.n);
  for (int k = 0; k < grid.n; ++k) {
    samples[k] = grid_point(grid, static_cast<int>((static_cast<long long>(k) * power) % grid.n));
  }
  return GridFunction{grid, std::move(samples)};
}

GridFunction rotate(const GridFunction& f, long r) {
  const int n = f.grid.n;
  const int shift = static_cast<int>(((r % n) + n) % n);
  Eigen::VectorXcd out(n);
  for (int k = 0; k < n; ++k) {
    out[k] = f.samples[(k - shift + n) % n];
  }
  return GridFunction{f.grid, std::move(out)};
}

Eigen::VectorXd magnitudes(const GridFunction& f) { return f.samples.cwiseAbs(); }

RearrangedProfile rearrange(const GridFunction& f) {
  const int n = f.grid.n;
  const Eigen::VectorXd mag = magnitudes(f);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&mag](int a, int b) { return mag[a] > mag[b]; });
  Eigen::VectorXd values(n);
  for (int i = 0; i < n; ++i) values[i] = mag[perm[i]];
  return RearrangedProfile{std::move(values), std::move(perm)};
}

VectorGridFunction make_vector_grid_function(const Grid& grid, Eigen::MatrixXcd samples) {
  if (samples.rows() != grid.n) {
    throw std::invalid_argument("vector sample count does not match grid size");
  }
  if (samples.cols() < 1) {
    throw std::invalid_argument("vector grid function needs dim >= 1");
  }
  if (!samples.allFinite()) {
    throw std::invalid_argument("vector grid function samples must be finite");
  }
  return VectorGridFunction{grid, std::move(samples)};
}

GridFunction pointwise_magnitude(const VectorGridFunction& f) {
  Eigen::VectorXd norms = f.samples.rowwise().norm();
  return make_grid_function(f.grid, norms);
}

double norm_l1(const GridFunction& f) {
  return f.samples.cwiseAbs().sum() / static_cast<double>(f.grid.n);
}

double norm_linf(const GridFunction& f) {
  return f.samples.cwiseAbs().maxCoeff();
}

GridFunction pointwise_product(const GridFunction& f, const GridFunction& g) {
  if (!(f.grid == g.grid)) {
    throw std::invalid_argument("grid mismatch in pointwise product");
  }
  return GridFunction{f.grid, f.samples.cwiseProduct(g.samples)};
}

}  // namespace symnorm
