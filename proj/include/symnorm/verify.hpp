#pragma once

#include "symnorm/circle_grid.hpp"
#include "symnorm/gauge_norms.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace symnorm {

struct VerifyOptions {
  int n = 64;
  std::uint64_t seed = 7;
  int threads = 0;  // 0 = hardware concurrency
};

struct PropertyResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double worst_slack = 0.0;
  std::string detail;
};

struct PropertySuiteEntry {
  std::string suite;
  std::string name;
  std::function<PropertyResult(const VerifyOptions&)> run;
};

/// The single registry behind the verify command; every module-level property
/// appears here exactly once, and the report's traceability table is generated
/// from this list rather than maintained by hand.
const std::vector<PropertySuiteEntry>& property_registry();

/// Runs every registered property at the given size and seed.  Suites execute
/// independently (fanned out over threads when threads != 1) with per-suite
/// derived seeds, and results merge in registry order regardless of thread
/// count.
std::vector<PropertyResult> run_verify(const VerifyOptions& options);

/// Named norm specs exercised by the randomized suites and the acceptance run.
std::vector<std::pair<std::string, NormSpec>> builtin_specs(const Grid& grid);

/// Random trigonometric polynomial with frequencies in [-degree, degree].
GridFunction random_band_limited(const Grid& grid, int degree, std::uint64_t seed);

/// Factorization fixtures: monomials, Blaschke products with zeros |a| <= 0.8,
/// zero-free functions, and products thereof.  Expected inner factors and
/// Jensen defects are recorded where an analytic form exists.
struct HardyFixture {
  std::string name;
  GridFunction f;
  bool expect_outer = false;
  bool has_expected_defect = false;
  double expected_defect = 0.0;
  bool has_expected_inner = false;
  GridFunction expected_inner;
};

std::vector<HardyFixture> factorization_fixtures(const Grid& grid);

/// Numerator/denominator pairs for the Smirnov decomposition suite.
std::vector<std::pair<GridFunction, GridFunction>> smirnov_fixtures(const Grid& grid);

}  // namespace symnorm
