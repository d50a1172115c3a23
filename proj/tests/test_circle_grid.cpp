#include "symnorm/circle_grid.hpp"
#include "symnorm/gauge_norms.hpp"
#include "symnorm/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace symnorm;

namespace {

GridFunction random_function(const Grid& grid, Rng& rng) {
  Eigen::VectorXcd samples(grid.n);
  for (int k = 0; k < grid.n; ++k) samples[k] = rng.complex_normal();
  return make_grid_function(grid, std::move(samples));
}

}  // namespace

TEST_CASE("make_grid accepts powers of two and rejects the rest") {
  const Grid g8 = make_grid(8);
  CHECK(g8.n == 8);
  for (int k = 0; k < 8; ++k) {
    const Complex z = grid_point(g8, k);
    CHECK(std::abs(z - std::polar(1.0, 2.0 * M_PI * k / 8.0)) < 1e-15);
  }

  const Grid g2 = make_grid(2);
  CHECK(std::abs(grid_point(g2, 0) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(grid_point(g2, 1) - Complex(-1, 0)) < 1e-15);

  CHECK_THROWS_AS(make_grid(6), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(-8), std::invalid_argument);
}

TEST_CASE("grid function construction validates length and finiteness") {
  const Grid grid = make_grid(4);
  const Eigen::VectorXcd short_samples = Eigen::VectorXcd::Zero(3);
  CHECK_THROWS_AS(make_grid_function(grid, short_samples), std::invalid_argument);
  Eigen::VectorXcd bad = Eigen::VectorXcd::Zero(4);
  bad[2] = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(make_grid_function(grid, bad), std::invalid_argument);
}

TEST_CASE("rotate shifts indicators and composes additively") {
  const Grid grid = make_grid(16);
  Rng rng(11);

  SUBCASE("identity rotation") {
    const GridFunction f = random_function(grid, rng);
    const GridFunction r0 = rotate(f, 0);
    CHECK((r0.samples - f.samples).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("indicator chase") {
    for (int j = 0; j < 16; ++j) {
      for (int r = -5; r <= 20; ++r) {
        const GridFunction moved = rotate(indicator(grid, j), r);
        const GridFunction expected = indicator(grid, (j + r) % 16);
        CHECK((moved.samples - expected.samples).cwiseAbs().maxCoeff() == 0.0);
      }
    }
  }

  SUBCASE("composition: rotate(rotate(f,a),b) == rotate(f,a+b)") {
    for (int trial = 0; trial < 100; ++trial) {
      const GridFunction f = random_function(grid, rng);
      const int a = rng.uniform_int(-40, 40);
      const int b = rng.uniform_int(-40, 40);
      const GridFunction lhs = rotate(rotate(f, a), b);
      const GridFunction rhs = rotate(f, a + b);
      CHECK((lhs.samples - rhs.samples).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("rearrange sorts magnitudes with a stable witnessing permutation") {
  const Grid grid = make_grid(4);

  SUBCASE("plain sort") {
    Eigen::VectorXcd samples(4);
    samples << 3.0, 1.0, 2.0, 0.0;
    const RearrangedProfile profile = rearrange(make_grid_function(grid, samples));
    CHECK(profile.values[0] == 3.0);
    CHECK(profile.values[1] == 2.0);
    CHECK(profile.values[2] == 1.0);
    CHECK(profile.values[3] == 0.0);
    for (int i = 0; i < 4; ++i) {
      CHECK(profile.values[i] == std::abs(samples[profile.perm[i]]));
    }
  }

  SUBCASE("indicator rearranges to leading ones") {
    const Grid g8 = make_grid(8);
    const GridFunction chi = indicator(g8, {5, 1, 6});
    const RearrangedProfile profile = rearrange(chi);
    for (int i = 0; i < 8; ++i) {
      CHECK(profile.values[i] == (i < 3 ? 1.0 : 0.0));
    }
  }

  SUBCASE("constant keeps the identity permutation") {
    const GridFunction c = constant_function(grid, Complex(0.0, -2.5));
    const RearrangedProfile profile = rearrange(c);
    for (int i = 0; i < 4; ++i) {
      CHECK(profile.perm[i] == i);
      CHECK(profile.values[i] == 2.5);
    }
  }
}

TEST_CASE("rearrangement is invariant under rotations and permutations") {
  const Grid grid = make_grid(32);
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const GridFunction f = random_function(grid, rng);
    const Eigen::VectorXd base = rearrange(f).values;

    const int r = rng.uniform_int(0, 31);
    const Eigen::VectorXd rotated = rearrange(rotate(f, r)).values;
    CHECK((rotated - base).cwiseAbs().maxCoeff() == 0.0);

    Eigen::VectorXcd shuffled = f.samples;
    for (int i = 31; i > 0; --i) std::swap(shuffled[i], shuffled[rng.uniform_int(0, i)]);
    const Eigen::VectorXd permuted = rearrange(make_grid_function(grid, shuffled)).values;
    CHECK((permuted - base).cwiseAbs().maxCoeff() == 0.0);

    const double mean = rearrange(f).values.sum() / 32.0;
    CHECK(mean == doctest::Approx(norm_l1(f)).epsilon(1e-13));
  }
}

TEST_CASE("pointwise magnitude reduces vector-valued functions") {
  const Grid grid = make_grid(8);

  SUBCASE("dim 1 is the ordinary modulus") {
    Rng rng(3);
    Eigen::MatrixXcd samples(8, 1);
    for (int k = 0; k < 8; ++k) samples(k, 0) = rng.complex_normal();
    const VectorGridFunction f = make_vector_grid_function(grid, samples);
    const GridFunction mag = pointwise_magnitude(f);
    for (int k = 0; k < 8; ++k) {
      CHECK(mag.samples[k].real() == doctest::Approx(std::abs(samples(k, 0))).epsilon(1e-15));
    }
  }

  SUBCASE("constant (3,4) has magnitude 5") {
    Eigen::MatrixXcd samples(8, 2);
    samples.col(0).setConstant(3.0);
    samples.col(1).setConstant(4.0);
    const GridFunction mag = pointwise_magnitude(make_vector_grid_function(grid, samples));
    for (int k = 0; k < 8; ++k) {
      CHECK(mag.samples[k].real() == doctest::Approx(5.0).epsilon(1e-15));
    }
  }

  SUBCASE("norms factor through the reduction, against an explicit oracle") {
    Rng rng(19);
    const std::vector<NormSpec> specs = {NormSpec::lp(1), NormSpec::lp(2), NormSpec::lp_inf(),
                                         NormSpec::ky_fan(0.5)};
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::MatrixXcd samples(8, 2);
      for (int k = 0; k < 8; ++k) {
        samples(k, 0) = rng.complex_normal();
        samples(k, 1) = rng.complex_normal();
      }
      const VectorGridFunction f = make_vector_grid_function(grid, samples);

      // Oracle: coordinate-wise explicit Euclidean norms.
      Eigen::VectorXd norms(8);
      for (int k = 0; k < 8; ++k) {
        norms[k] = std::sqrt(std::norm(samples(k, 0)) + std::norm(samples(k, 1)));
      }
      const GridFunction oracle = make_grid_function(grid, norms);

      for (const NormSpec& spec : specs) {
        CHECK(eval_norm(spec, pointwise_magnitude(f)) ==
              doctest::Approx(eval_norm(spec, oracle)).epsilon(1e-14));
      }
    }
  }
}
