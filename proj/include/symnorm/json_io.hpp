#pragma once

#include "symnorm/circle_grid.hpp"
#include "symnorm/duality.hpp"
#include "symnorm/gauge_norms.hpp"
#include "symnorm/hardy_factorization.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace symnorm {

/// I/O failures (missing file, unreadable path) as distinct from validation
/// failures, so the CLI can map them to separate exit codes.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// Canonical serialization: keys sorted (nlohmann objects already are),
/// doubles printed with 17 significant digits so values round-trip bit-exactly
/// and equal configs hash identically.
std::string canonical_dump(const Json& value, int indent = -1);

/// FNV-1a 64-bit hash of the canonical dump, as fixed-width hex.
std::string canonical_hash(const Json& value);

Json grid_function_to_json(const GridFunction& f);
GridFunction grid_function_from_json(const Json& value);

Json norm_spec_to_json(const NormSpec& spec);
NormSpec norm_spec_from_json(const Json& value);

Json dual_evaluation_to_json(const DualEvaluation& eval);
Json factorization_to_json(const FactorizationResult& result);
Json smirnov_to_json(const SmirnovDecomposition& decomposition);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace symnorm
