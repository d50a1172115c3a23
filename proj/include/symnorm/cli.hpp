#pragma once

#include "symnorm/json_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace symnorm {

/// Exit codes: 0 ok, 1 property failure, 2 usage, 3 I/O, 4 validation.
enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFailure = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitValidation = 4,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  enum class Command { Norm, Dual, Factor, Converge, Beurling, Smirnov, Verify };
  Command command = Command::Verify;
  int grid_n = 64;
  std::string spec_path;
  std::vector<std::string> input_paths;
  std::uint64_t seed = 7;
  std::map<std::string, double> tolerances;
  std::string output_path;
  int threads = 0;  // from SYMNORM_THREADS; 0 = auto

  /// Canonical echo of the configuration (hashed into every report).
  Json to_json() const;
};

/// Parses and validates argv.  Throws UsageError for malformed command lines,
/// FileError when referenced files are missing or unparsable, and
/// std::invalid_argument for semantic validation failures (e.g. --n not a
/// power of two).
RunConfig parse_config(int argc, const char* const* argv);

struct Report {
  Json document;            // deterministic given (config, seed, version)
  std::string csv;          // converge curves; empty otherwise
  bool property_failure = false;
};

Report run(const RunConfig& config);

/// Writes the canonical JSON (or CSV for converge) to config.output_path when
/// set, and a human-readable summary with wall-clock to `human`.
void emit_report(const Report& report, const RunConfig& config, std::ostream& human,
                 double wall_seconds);

/// Full pipeline with exit-code mapping; the entry point used by main().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

extern const char* const kToolVersion;

}  // namespace symnorm
