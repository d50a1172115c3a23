#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace symnorm {

using Complex = std::complex<double>;

/// Uniform discretization of the unit circle: n sample points z_k = e^{2*pi*i*k/n},
/// each carrying measure 1/n.  n must be a power of two, n >= 2, so that rotation
/// by one grid step is an exact symmetry and the FFT pairs are exact.
struct Grid {
  int n = 0;

  friend bool operator==(const Grid& lhs, const Grid& rhs) { return lhs.n == rhs.n; }
};

bool is_power_of_two(long long n);

/// Builds a grid, rejecting n that is not a power of two >= 2.
Grid make_grid(int n);

/// z_k = e^{2*pi*i*k/n}.
Complex grid_point(const Grid& grid, int k);

/// Complex boundary samples f(z_k) on a grid.  Samples must all be finite.
struct GridFunction {
  Grid grid;
  Eigen::VectorXcd samples;

  int size() const { return grid.n; }
};

GridFunction make_grid_function(const Grid& grid, Eigen::VectorXcd samples);
GridFunction make_grid_function(const Grid& grid, const Eigen::VectorXd& real_samples);

/// Constant function z -> value.
GridFunction constant_function(const Grid& grid, Complex value);

/// Indicator of a single grid index.
GridFunction indicator(const Grid& grid, int index);

/// Indicator of an index set.
GridFunction indicator(const Grid& grid, const std::vector<int>& indices);

/// Samples of z -> z^power.
GridFunction monomial(const Grid& grid, int power);

/// Rotation f_w with w = e^{2*pi*i*r/n}: output sample k is input sample (k - r) mod n.
GridFunction rotate(const GridFunction& f, long r);

/// Pointwise magnitudes |f(z_k)| as a real vector.
Eigen::VectorXd magnitudes(const GridFunction& f);

/// Nonincreasing magnitude profile with the witnessing permutation:
/// values[i] = |samples[perm[i]]|, ties broken by ascending original index.
struct RearrangedProfile {
  Eigen::VectorXd values;
  std::vector<int> perm;
};

RearrangedProfile rearrange(const GridFunction& f);

/// C^dim-valued samples; row k holds f(z_k).
struct VectorGridFunction {
  Grid grid;
  Eigen::MatrixXcd samples;  // n x dim

  int dim() const { return static_cast<int>(samples.cols()); }
};

VectorGridFunction make_vector_grid_function(const Grid& grid, Eigen::MatrixXcd samples);

/// Euclidean pointwise magnitude |f|(z) = ||f(z)||; the reduction through which
/// every norm of a vector-valued function is defined.
GridFunction pointwise_magnitude(const VectorGridFunction& f);

/// (1/n) sum |f(z_k)|.
double norm_l1(const GridFunction& f);

/// max_k |f(z_k)|.
double norm_linf(const GridFunction& f);

/// Pointwise product h(z_k) = f(z_k) g(z_k).
GridFunction pointwise_product(const GridFunction& f, const GridFunction& g);

}  // namespace symnorm
