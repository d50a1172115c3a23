#include "symnorm/json_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace symnorm {

namespace {

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

void dump_canonical(const Json& value, std::ostream& out, int indent, int depth) {
  const std::string pad = indent >= 0 ? std::string(static_cast<std::size_t>(indent) *
                                                        static_cast<std::size_t>(depth + 1),
                                                    ' ')
                                      : "";
  const std::string close_pad =
      indent >= 0 ? std::string(static_cast<std::size_t>(indent) * static_cast<std::size_t>(depth),
                                ' ')
                  : "";
  const char* newline = indent >= 0 ? "\n" : "";
  switch (value.type()) {
    case Json::value_t::object: {
      out << "{" << newline;
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out << "," << newline;
        first = false;
        out << pad << Json(it.key()).dump() << (indent >= 0 ? ": " : ":");
        dump_canonical(it.value(), out, indent, depth + 1);
      }
      out << newline << close_pad << "}";
      break;
    }
    case Json::value_t::array: {
      out << "[" << newline;
      bool first = true;
      for (const auto& item : value) {
        if (!first) out << "," << newline;
        first = false;
        out << pad;
        dump_canonical(item, out, indent, depth + 1);
      }
      out << newline << close_pad << "]";
      break;
    }
    case Json::value_t::number_float:
      out << format_double(value.get<double>());
      break;
    default:
      out << value.dump();
      break;
  }
}

}  // namespace

std::string canonical_dump(const Json& value, int indent) {
  std::ostringstream out;
  dump_canonical(value, out, indent, 0);
  return out.str();
}

std::string canonical_hash(const Json& value) {
  const std::string text = canonical_dump(value);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[24];
  std::snprintf(buffer, sizeof(buffer), "%016" PRIx64, hash);
  return buffer;
}

Json grid_function_to_json(const GridFunction& f) {
  Json samples = Json::array();
  for (int k = 0; k < f.grid.n; ++k) {
    samples.push_back(Json::array({f.samples[k].real(), f.samples[k].imag()}));
  }
  return Json{{"n", f.grid.n}, {"samples", samples}};
}

GridFunction grid_function_from_json(const Json& value) {
  if (!value.is_object() || !value.contains("n") || !value.contains("samples")) {
    throw std::invalid_argument("grid function JSON needs fields n and samples");
  }
  const int n = value.at("n").get<int>();
  const Grid grid = make_grid(n);
  const Json& samples = value.at("samples");
  if (!samples.is_array() || static_cast<int>(samples.size()) != n) {
    throw std::invalid_argument("grid function JSON has " + std::to_string(samples.size()) +
                                " samples for n = " + std::to_string(n));
  }
  Eigen::VectorXcd data(n);
  for (int k = 0; k < n; ++k) {
    const Json& pair = samples.at(k);
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("grid function samples must be [re, im] pairs");
    }
    data[k] = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return make_grid_function(grid, std::move(data));
}

Json norm_spec_to_json(const NormSpec& spec) {
  switch (spec.kind()) {
    case NormKind::Lp: {
      const double p = spec.as<NormSpec::Lp>().p;
      if (std::isinf(p)) return Json{{"kind", "lp"}, {"p", "inf"}};
      return Json{{"kind", "lp"}, {"p", p}};
    }
    case NormKind::KyFan:
      return Json{{"kind", "kyfan"}, {"t", spec.as<NormSpec::KyFan>().t}};
    case NormKind::Marcinkiewicz: {
      const Eigen::VectorXd& u = spec.as<NormSpec::Marcinkiewicz>().u;
      Json samples = Json::array();
      for (Eigen::Index j = 0; j < u.size(); ++j) samples.push_back(u[j]);
      return Json{{"kind", "marcinkiewicz"}, {"u", samples}};
    }
    case NormKind::Combo: {
      const auto& node = spec.as<NormSpec::Combo>();
      Json weights = Json::array();
      Json children = Json::array();
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        weights.push_back(node.weights[i]);
        children.push_back(norm_spec_to_json(node.children[i]));
      }
      return Json{{"kind", "combo"}, {"weights", weights}, {"children", children}};
    }
    case NormKind::SupFamily: {
      Json children = Json::array();
      for (const auto& child : spec.as<NormSpec::SupFamily>().children) {
        children.push_back(norm_spec_to_json(child));
      }
      return Json{{"kind", "supfamily"}, {"children", children}};
    }
    case NormKind::RotationWeighted:
      return Json{{"kind", "rotation_weighted"},
                  {"h", grid_function_to_json(spec.as<NormSpec::RotationWeighted>().h)}};
    case NormKind::PermutationWeighted:
      return Json{{"kind", "permutation_weighted"},
                  {"h", grid_function_to_json(spec.as<NormSpec::PermutationWeighted>().h)}};
  }
  throw std::logic_error("unreachable norm kind");
}

NormSpec norm_spec_from_json(const Json& value) {
  if (!value.is_object() || !value.contains("kind")) {
    throw std::invalid_argument("norm spec JSON needs a kind tag");
  }
  const std::string kind = value.at("kind").get<std::string>();
  if (kind == "lp") {
    const Json& p = value.at("p");
    if (p.is_string()) {
      if (p.get<std::string>() != "inf") {
        throw std::invalid_argument("lp exponent string must be \"inf\"");
      }
      return NormSpec::lp_inf();
    }
    return NormSpec::lp(p.get<double>());
  }
  if (kind == "kyfan") {
    return NormSpec::ky_fan(value.at("t").get<double>());
  }
  if (kind == "marcinkiewicz") {
    const Json& samples = value.at("u");
    Eigen::VectorXd u(samples.size());
    for (std::size_t j = 0; j < samples.size(); ++j) u[static_cast<Eigen::Index>(j)] = samples.at(j).get<double>();
    return NormSpec::marcinkiewicz(std::move(u));
  }
  if (kind == "combo") {
    std::vector<double> weights;
    std::vector<NormSpec> children;
    for (const auto& w : value.at("weights")) weights.push_back(w.get<double>());
    for (const auto& child : value.at("children")) children.push_back(norm_spec_from_json(child));
    return NormSpec::combo(std::move(weights), std::move(children));
  }
  if (kind == "supfamily") {
    std::vector<NormSpec> children;
    for (const auto& child : value.at("children")) children.push_back(norm_spec_from_json(child));
    return NormSpec::sup_family(std::move(children));
  }
  if (kind == "rotation_weighted") {
    return NormSpec::rotation_weighted(grid_function_from_json(value.at("h")));
  }
  if (kind == "permutation_weighted") {
    return NormSpec::permutation_weighted(grid_function_from_json(value.at("h")));
  }
  throw std::invalid_argument("unknown norm spec kind: " + kind);
}

namespace {

const char* method_name(DualMethod method) {
  switch (method) {
    case DualMethod::ClosedForm:
      return "closed_form";
    case DualMethod::LP:
      return "lp";
    case DualMethod::ProjectedGradient:
      return "projected_gradient";
  }
  return "unknown";
}

}  // namespace

Json dual_evaluation_to_json(const DualEvaluation& eval) {
  return Json{{"value", eval.value},
              {"gap", eval.gap},
              {"method", method_name(eval.method)},
              {"witness", grid_function_to_json(eval.witness)}};
}

Json factorization_to_json(const FactorizationResult& result) {
  return Json{{"inner", grid_function_to_json(result.inner)},
              {"outer", grid_function_to_json(result.outer)},
              {"unimodularity_residual", result.unimodularity_residual},
              {"reconstruction_residual", result.reconstruction_residual},
              {"log_clamp_applied", result.log_clamp_applied},
              {"success", result.success},
              {"tolerance", result.tolerance}};
}

Json smirnov_to_json(const SmirnovDecomposition& decomposition) {
  return Json{{"u", grid_function_to_json(decomposition.u)},
              {"v", grid_function_to_json(decomposition.v)},
              {"a", grid_function_to_json(decomposition.a)},
              {"b", grid_function_to_json(decomposition.b)},
              {"partition_residual", decomposition.partition_residual},
              {"reconstruction_residual", decomposition.reconstruction_residual}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileError("cannot open " + path);
  }
  Json value;
  try {
    in >> value;
  } catch (const Json::parse_error& error) {
    throw FileError("cannot parse " + path + ": " + error.what());
  }
  return value;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) {
    throw FileError("cannot open " + path + " for writing");
  }
  out << contents;
  if (!out) {
    throw FileError("failed writing " + path);
  }
}

}  // namespace symnorm
