#include "symnorm/cli.hpp"

#include "symnorm/duality.hpp"
#include "symnorm/fourier_kernels.hpp"
#include "symnorm/hardy_factorization.hpp"
#include "symnorm/rng.hpp"
#include "symnorm/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace symnorm {

const char* const kToolVersion = "symnorm 1.0.0";

namespace {

const char* command_name(RunConfig::Command command) {
  switch (command) {
    case RunConfig::Command::Norm:
      return "norm";
    case RunConfig::Command::Dual:
      return "dual";
    case RunConfig::Command::Factor:
      return "factor";
    case RunConfig::Command::Converge:
      return "converge";
    case RunConfig::Command::Beurling:
      return "beurling";
    case RunConfig::Command::Smirnov:
      return "smirnov";
    case RunConfig::Command::Verify:
      return "verify";
  }
  return "unknown";
}

int env_threads() {
  const char* raw = std::getenv("SYMNORM_THREADS");
  if (!raw) return 0;
  try {
    return std::max(0, std::stoi(raw));
  } catch (...) {
    return 0;
  }
}

}  // namespace

Json RunConfig::to_json() const {
  Json tol = Json::object();
  for (const auto& [name, value] : tolerances) tol[name] = value;
  return Json{{"command", command_name(command)}, {"n", grid_n},
              {"spec", spec_path},               {"inputs", input_paths},
              {"seed", seed},                    {"tolerances", tol},
              {"out", output_path}};
}

RunConfig parse_config(int argc, const char* const* argv) {
  CLI::App app{"rotationally symmetric norms on the sampled unit circle"};
  app.require_subcommand(1);

  RunConfig config;
  config.grid_n = 0;
  config.threads = env_threads();

  struct SubSpec {
    RunConfig::Command command;
    CLI::App* sub;
    bool needs_spec;
    int min_inputs;
  };
  std::vector<SubSpec> subs;

  auto add_common = [&](CLI::App* sub, bool with_spec, bool with_inputs) {
    if (with_spec) sub->add_option("--spec", config.spec_path, "norm spec JSON file");
    if (with_inputs) sub->add_option("--in", config.input_paths, "grid function JSON file(s)");
    sub->add_option("--n", config.grid_n, "grid size (power of two)");
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_option("--out", config.output_path, "output path");
    sub->add_option("--tol", config.tolerances, "named tolerance overrides (name=value)");
  };

  subs.push_back({RunConfig::Command::Norm, app.add_subcommand("norm", "evaluate alpha(f)"),
                  true, 1});
  subs.push_back({RunConfig::Command::Dual, app.add_subcommand("dual", "evaluate the dual norm"),
                  true, 1});
  subs.push_back({RunConfig::Command::Factor,
                  app.add_subcommand("factor", "inner-outer factorization"), false, 1});
  subs.push_back({RunConfig::Command::Converge,
                  app.add_subcommand("converge", "Cesaro/Poisson convergence curves as CSV"),
                  true, 1});
  subs.push_back({RunConfig::Command::Beurling,
                  app.add_subcommand("beurling", "invariant-subspace span comparison"), false, 1});
  subs.push_back({RunConfig::Command::Smirnov,
                  app.add_subcommand("smirnov", "canonical quotient decomposition"), false, 2});
  subs.push_back({RunConfig::Command::Verify,
                  app.add_subcommand("verify", "run every property suite"), false, 0});

  for (auto& sub : subs) {
    add_common(sub.sub, sub.needs_spec, sub.command != RunConfig::Command::Verify);
  }

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& error) {
    throw UsageError(error.what());
  }

  const SubSpec* active = nullptr;
  for (const auto& sub : subs) {
    if (sub.sub->parsed()) {
      active = &sub;
      break;
    }
  }
  if (!active) throw UsageError("a subcommand is required");
  config.command = active->command;

  // Semantic validation before touching the filesystem.  grid_n = 0 means
  // "take n from the input files"; verify falls back to its default size.
  if (config.grid_n != 0 && (!is_power_of_two(config.grid_n) || config.grid_n < 2)) {
    throw std::invalid_argument("--n must be a power of two >= 2, got " +
                                std::to_string(config.grid_n));
  }
  if (config.command == RunConfig::Command::Verify && config.grid_n == 0) {
    config.grid_n = 64;
  }
  if (active->needs_spec && config.spec_path.empty()) {
    throw UsageError(std::string(command_name(config.command)) + " requires --spec");
  }
  if (static_cast<int>(config.input_paths.size()) < active->min_inputs) {
    throw UsageError(std::string(command_name(config.command)) + " requires at least " +
                     std::to_string(active->min_inputs) + " --in file(s)");
  }

  // Referenced files must exist and parse (I/O errors), contents are
  // validated by the loaders (validation errors).
  if (!config.spec_path.empty()) {
    read_json_file(config.spec_path);
  }
  for (const std::string& path : config.input_paths) {
    read_json_file(path);
  }
  return config;
}

namespace {

NormSpec load_spec(const RunConfig& config) {
  return norm_spec_from_json(read_json_file(config.spec_path));
}

GridFunction load_input(const std::string& path, const RunConfig& config) {
  GridFunction f = grid_function_from_json(read_json_file(path));
  if (config.grid_n != 0 && f.grid.n != config.grid_n) {
    throw std::invalid_argument(path + " has n = " + std::to_string(f.grid.n) +
                                " but --n " + std::to_string(config.grid_n) + " was requested");
  }
  return f;
}

Json case_entry(const std::string& path) { return Json{{"input", path}}; }

Report run_norm(const RunConfig& config) {
  const NormSpec spec = load_spec(config);
  Report report;
  Json results = Json::array();
  for (const std::string& path : config.input_paths) {
    const GridFunction f = load_input(path, config);
    Json entry = case_entry(path);
    entry["alpha"] = eval_norm(spec, f);
    entry["l1"] = norm_l1(f);
    entry["linf"] = norm_linf(f);
    results.push_back(std::move(entry));
  }
  report.document["results"] = std::move(results);
  return report;
}

Report run_dual(const RunConfig& config) {
  const NormSpec spec = load_spec(config);
  Report report;
  Json results = Json::array();
  for (const std::string& path : config.input_paths) {
    const GridFunction f = load_input(path, config);
    const DualEvaluation eval = dual_norm(spec, f);
    Json entry = case_entry(path);
    entry["dual"] = dual_evaluation_to_json(eval);
    const BidualCheck bidual = bidual_check(spec, f);
    entry["alpha"] = bidual.alpha;
    entry["alpha_bidual"] = bidual.alpha_bidual;
    entry["bidual_relative_gap"] = bidual.relative_gap;
    results.push_back(std::move(entry));
  }
  report.document["results"] = std::move(results);
  return report;
}

Report run_factor(const RunConfig& config) {
  Report report;
  Json results = Json::array();
  for (const std::string& path : config.input_paths) {
    const GridFunction f = load_input(path, config);
    const FactorizationResult factorization = inner_outer_factor(f);
    Json entry = case_entry(path);
    entry["factorization"] = factorization_to_json(factorization);
    const OuterTest outer_test = is_outer(f);
    entry["input_is_outer"] = outer_test.outer;
    entry["jensen_defect"] = outer_test.jensen_defect;
    if (!factorization.success) report.property_failure = true;
    results.push_back(std::move(entry));
  }
  report.document["results"] = std::move(results);
  return report;
}

Report run_converge(const RunConfig& config) {
  const NormSpec spec = load_spec(config);
  Report report;
  std::ostringstream csv;
  csv << "kind,param,error,value\n";
  Json results = Json::array();
  for (const std::string& path : config.input_paths) {
    const GridFunction f = load_input(path, config);
    const double alpha = eval_norm(spec, f);
    const int n = f.grid.n;
    for (int m = 1; m < n / 2; m *= 2) {
      const GridFunction mean = cesaro_mean(f, m);
      const GridFunction err{f.grid, f.samples - mean.samples};
      csv << "fejer," << m << "," << eval_norm(spec, err) << "," << eval_norm(spec, mean)
          << "\n";
    }
    for (double r : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999}) {
      const GridFunction smoothed = poisson_extension(f, r);
      const GridFunction err{f.grid, f.samples - smoothed.samples};
      csv << "poisson," << r << "," << eval_norm(spec, err) << "," << eval_norm(spec, smoothed)
          << "\n";
    }
    Json entry = case_entry(path);
    entry["alpha"] = alpha;
    results.push_back(std::move(entry));
  }
  report.document["results"] = std::move(results);
  report.csv = csv.str();
  return report;
}

Report run_beurling(const RunConfig& config) {
  Report report;
  Json results = Json::array();
  for (const std::string& path : config.input_paths) {
    const GridFunction f = load_input(path, config);
    int truncation = 16;
    if (auto it = config.tolerances.find("truncation"); it != config.tolerances.end()) {
      truncation = static_cast<int>(it->second);
    }
    truncation = std::min(truncation, f.grid.n / 4);
    const SubspaceComparison comparison = beurling_check(f, truncation);
    Json entry = case_entry(path);
    entry["truncation"] = comparison.truncation;
    entry["principal_angle"] = comparison.principal_angle;
    entry["generator_inner"] = grid_function_to_json(comparison.generator_inner);
    results.push_back(std::move(entry));
  }
  report.document["results"] = std::move(results);
  return report;
}

Report run_smirnov(const RunConfig& config) {
  Report report;
  Json results = Json::array();
  for (std::size_t i = 0; i + 1 < config.input_paths.size(); i += 2) {
    const GridFunction f1 = load_input(config.input_paths[i], config);
    const GridFunction f2 = load_input(config.input_paths[i + 1], config);
    const SmirnovDecomposition decomposition = smirnov_decompose(f1, f2);
    Json entry = Json{{"numerator", config.input_paths[i]},
                      {"denominator", config.input_paths[i + 1]}};
    entry["decomposition"] = smirnov_to_json(decomposition);
    results.push_back(std::move(entry));
  }
  report.document["results"] = std::move(results);
  return report;
}

Report run_verify_command(const RunConfig& config) {
  VerifyOptions options;
  options.n = config.grid_n;
  options.seed = config.seed;
  options.threads = config.threads;
  const std::vector<PropertyResult> results = run_verify(options);

  Report report;
  Json table = Json::array();
  Json registry = Json::array();
  for (const PropertyResult& result : results) {
    table.push_back(Json{{"suite", result.suite},
                         {"property", result.name},
                         {"pass", result.pass},
                         {"worst_slack", result.worst_slack},
                         {"detail", result.detail}});
    registry.push_back(Json{{"suite", result.suite}, {"property", result.name}});
    if (!result.pass) report.property_failure = true;
  }
  report.document["properties"] = std::move(table);
  report.document["registry"] = std::move(registry);
  return report;
}

}  // namespace

Report run(const RunConfig& config) {
  Report report;
  switch (config.command) {
    case RunConfig::Command::Norm:
      report = run_norm(config);
      break;
    case RunConfig::Command::Dual:
      report = run_dual(config);
      break;
    case RunConfig::Command::Factor:
      report = run_factor(config);
      break;
    case RunConfig::Command::Converge:
      report = run_converge(config);
      break;
    case RunConfig::Command::Beurling:
      report = run_beurling(config);
      break;
    case RunConfig::Command::Smirnov:
      report = run_smirnov(config);
      break;
    case RunConfig::Command::Verify:
      report = run_verify_command(config);
      break;
  }
  report.document["command"] = command_name(config.command);
  report.document["config"] = config.to_json();
  report.document["config_hash"] = canonical_hash(config.to_json());
  report.document["generator"] = Rng::generator_name();
  report.document["version"] = kToolVersion;
  return report;
}

void emit_report(const Report& report, const RunConfig& config, std::ostream& human,
                 double wall_seconds) {
  if (!config.output_path.empty()) {
    if (config.command == RunConfig::Command::Converge) {
      write_text_file(config.output_path, report.csv);
    } else {
      write_text_file(config.output_path, canonical_dump(report.document, 2) + "\n");
    }
  }

  human << report.document["command"].get<std::string>() << " ("
        << report.document["config_hash"].get<std::string>() << ")\n";
  if (report.document.contains("properties")) {
    for (const auto& row : report.document["properties"]) {
      human << (row["pass"].get<bool>() ? "  [pass] " : "  [FAIL] ") << std::left
            << std::setw(22) << row["suite"].get<std::string>()
            << row["property"].get<std::string>() << "  worst slack "
            << std::setprecision(3) << std::scientific << row["worst_slack"].get<double>();
      const std::string detail = row["detail"].get<std::string>();
      if (!detail.empty()) human << "  [" << detail << "]";
      human << "\n" << std::defaultfloat;
    }
  }
  if (report.document.contains("results")) {
    human << "  cases: " << report.document["results"].size() << "\n";
  }
  if (config.command == RunConfig::Command::Converge && config.output_path.empty()) {
    human << report.csv;
  }
  human << "  wall clock: " << std::fixed << std::setprecision(2) << wall_seconds << " s\n"
        << std::defaultfloat;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_config(argc, argv);
  } catch (const UsageError& error) {
    err << "usage error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const FileError& error) {
    err << "i/o error: " << error.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& error) {
    err << "validation error: " << error.what() << "\n";
    return kExitValidation;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    report = run(config);
  } catch (const FileError& error) {
    err << "i/o error: " << error.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& error) {
    err << "validation error: " << error.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return kExitPropertyFailure;
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  try {
    emit_report(report, config, out, wall);
  } catch (const FileError& error) {
    err << "i/o error: " << error.what() << "\n";
    return kExitIo;
  }
  return report.property_failure ? kExitPropertyFailure : kExitOk;
}

}  // namespace symnorm
