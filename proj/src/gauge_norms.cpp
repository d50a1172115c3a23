#include "symnorm/gauge_norms.hpp"

#include "symnorm/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace symnorm {

namespace {

constexpr double kNormalizationTol = 1e-12;

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

Eigen::VectorXd validated_weight_samples(const GridFunction& h, const char* what) {
  Eigen::VectorXd w(h.grid.n);
  for (int k = 0; k < h.grid.n; ++k) {
    require(h.samples[k].imag() == 0.0, std::string(what) + " weight must be real");
    require(h.samples[k].real() >= 0.0, std::string(what) + " weight must be nonnegative");
    w[k] = h.samples[k].real();
  }
  const double mean = w.sum() / static_cast<double>(h.grid.n);
  require(std::abs(mean - 1.0) <= kNormalizationTol,
          std::string(what) + " weight must have mean 1");
  return w;
}

}  // namespace

NormSpec::NormSpec(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

NormSpec NormSpec::lp(double p) {
  require(!std::isnan(p) && p >= 1.0, "Lp exponent must satisfy 1 <= p <= inf");
  return NormSpec(Node(Lp{p}));
}

NormSpec NormSpec::lp_inf() { return lp(std::numeric_limits<double>::infinity()); }

NormSpec NormSpec::ky_fan(double t) {
  require(std::isfinite(t) && t > 0.0 && t <= 1.0, "Ky Fan parameter must lie in (0, 1]");
  return NormSpec(Node(KyFan{t}));
}

NormSpec NormSpec::marcinkiewicz(Eigen::VectorXd u) {
  require(u.size() >= 1, "Marcinkiewicz weight needs at least one sample");
  double umax = 0.0;
  for (Eigen::Index j = 0; j < u.size(); ++j) {
    require(std::isfinite(u[j]) && u[j] > 0.0 && u[j] <= 1.0 + 1e-15,
            "Marcinkiewicz weight samples must lie in (0, 1]");
    umax = std::max(umax, u[j]);
  }
  require(std::abs(umax - 1.0) <= kNormalizationTol, "Marcinkiewicz weight must attain 1");
  return NormSpec(Node(Marcinkiewicz{std::move(u)}));
}

NormSpec NormSpec::combo(std::vector<double> weights, std::vector<NormSpec> children) {
  require(!children.empty() && weights.size() == children.size(),
          "combo needs matching nonempty weights and children");
  double sum = 0.0;
  for (double w : weights) {
    require(std::isfinite(w) && w > 0.0, "combo weights must be positive");
    sum += w;
  }
  require(std::abs(sum - 1.0) <= kNormalizationTol, "combo weights must sum to 1");
  return NormSpec(Node(Combo{std::move(weights), std::move(children)}));
}

NormSpec NormSpec::sup_family(std::vector<NormSpec> children) {
  require(!children.empty(), "sup family needs at least one child");
  return NormSpec(Node(SupFamily{std::move(children)}));
}

NormSpec NormSpec::rotation_weighted(GridFunction h) {
  validated_weight_samples(h, "rotation");
  return NormSpec(Node(RotationWeighted{std::move(h)}));
}

NormSpec NormSpec::permutation_weighted(GridFunction h) {
  validated_weight_samples(h, "permutation");
  return NormSpec(Node(PermutationWeighted{std::move(h)}));
}

NormKind NormSpec::kind() const {
  return std::visit(
      [](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Lp>) return NormKind::Lp;
        if constexpr (std::is_same_v<T, KyFan>) return NormKind::KyFan;
        if constexpr (std::is_same_v<T, Marcinkiewicz>) return NormKind::Marcinkiewicz;
        if constexpr (std::is_same_v<T, Combo>) return NormKind::Combo;
        if constexpr (std::is_same_v<T, SupFamily>) return NormKind::SupFamily;
        if constexpr (std::is_same_v<T, RotationWeighted>) return NormKind::RotationWeighted;
        if constexpr (std::is_same_v<T, PermutationWeighted>) return NormKind::PermutationWeighted;
      },
      *node_);
}

std::string NormSpec::label() const {
  std::ostringstream out;
  switch (kind()) {
    case NormKind::Lp: {
      const double p = as<Lp>().p;
      if (std::isinf(p)) {
        out << "lp(inf)";
      } else {
        out << "lp(" << p << ")";
      }
      break;
    }
    case NormKind::KyFan:
      out << "kyfan(" << as<KyFan>().t << ")";
      break;
    case NormKind::Marcinkiewicz:
      out << "marcinkiewicz[" << as<Marcinkiewicz>().u.size() << "]";
      break;
    case NormKind::Combo: {
      const auto& node = as<Combo>();
      out << "combo(";
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) out << ",";
        out << node.weights[i] << "*" << node.children[i].label();
      }
      out << ")";
      break;
    }
    case NormKind::SupFamily: {
      const auto& node = as<SupFamily>();
      out << "sup(";
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) out << ",";
        out << node.children[i].label();
      }
      out << ")";
      break;
    }
    case NormKind::RotationWeighted:
      out << "rotation_weighted[" << as<RotationWeighted>().h.grid.n << "]";
      break;
    case NormKind::PermutationWeighted:
      out << "permutation_weighted[" << as<PermutationWeighted>().h.grid.n << "]";
      break;
  }
  return out.str();
}

SymmetryClass symmetry_class(const NormSpec& spec) {
  switch (spec.kind()) {
    case NormKind::RotationWeighted:
      return SymmetryClass::Rotational;
    case NormKind::Combo: {
      for (const auto& child : spec.as<NormSpec::Combo>().children) {
        if (symmetry_class(child) == SymmetryClass::Rotational) return SymmetryClass::Rotational;
      }
      return SymmetryClass::FullySymmetric;
    }
    case NormKind::SupFamily: {
      for (const auto& child : spec.as<NormSpec::SupFamily>().children) {
        if (symmetry_class(child) == SymmetryClass::Rotational) return SymmetryClass::Rotational;
      }
      return SymmetryClass::FullySymmetric;
    }
    default:
      return SymmetryClass::FullySymmetric;
  }
}

namespace {

// Shared per-evaluation data: magnitudes in sample order, the nonincreasing
// profile, and its prefix sums (cumsum[i] = sum of the i largest magnitudes).
struct EvalContext {
  const GridFunction* f = nullptr;
  Eigen::VectorXd mag;
  Eigen::VectorXd sorted;
  Eigen::VectorXd cumsum;

  int n() const { return static_cast<int>(mag.size()); }
};

EvalContext make_context(const GridFunction& f) {
  EvalContext ctx;
  ctx.f = &f;
  ctx.mag = magnitudes(f);
  ctx.sorted = ctx.mag;
  std::sort(ctx.sorted.data(), ctx.sorted.data() + ctx.sorted.size(), std::greater<double>());
  ctx.cumsum.resize(ctx.sorted.size() + 1);
  ctx.cumsum[0] = 0.0;
  for (Eigen::Index i = 0; i < ctx.sorted.size(); ++i) {
    ctx.cumsum[i + 1] = ctx.cumsum[i] + ctx.sorted[i];
  }
  return ctx;
}

double lp_value(double p, const EvalContext& ctx) {
  const int n = ctx.n();
  if (std::isinf(p)) {
    return ctx.sorted[0];
  }
  if (p == 1.0) {
    return ctx.cumsum[n] / static_cast<double>(n);
  }
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += std::pow(ctx.sorted[i], p);
  return std::pow(sum / static_cast<double>(n), 1.0 / p);
}

// (1/t) * integral over (0, t] of the piecewise-constant extension of the
// profile (value sorted[i] on (i/n, (i+1)/n]).
double ky_fan_value(double t, const EvalContext& ctx) {
  const int n = ctx.n();
  const double tn = t * static_cast<double>(n);
  const int k = static_cast<int>(std::floor(tn));
  if (k >= n) {
    return ctx.cumsum[n] / static_cast<double>(n) / t;
  }
  const double integral = ctx.cumsum[k] / static_cast<double>(n) +
                          (t - static_cast<double>(k) / static_cast<double>(n)) * ctx.sorted[k];
  return integral / t;
}

// Piecewise-linear weight through the samples (j/n_u, u_j), j = 1..n_u,
// extended linearly through the origin on (0, 1/n_u).
double marcinkiewicz_weight_at(const Eigen::VectorXd& u, double t) {
  const int nu = static_cast<int>(u.size());
  const double x = t * static_cast<double>(nu);
  if (x <= 1.0) return u[0] * x;
  if (x >= static_cast<double>(nu)) return u[nu - 1];
  const int j = static_cast<int>(std::floor(x));
  const double frac = x - static_cast<double>(j);
  return u[j - 1] * (1.0 - frac) + u[j] * frac;
}

double marcinkiewicz_value(const Eigen::VectorXd& u, const EvalContext& ctx) {
  const int n = ctx.n();
  const int nu = static_cast<int>(u.size());
  double best = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n);
    best = std::max(best, marcinkiewicz_weight_at(u, t) * ky_fan_value(t, ctx));
  }
  for (int j = 1; j <= nu; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(nu);
    best = std::max(best, marcinkiewicz_weight_at(u, t) * ky_fan_value(t, ctx));
  }
  return best;
}

double rotation_weighted_value(const GridFunction& h, const EvalContext& ctx) {
  const int n = ctx.n();
  if (h.grid.n != n) {
    throw std::invalid_argument("rotation weight grid size " + std::to_string(h.grid.n) +
                                " does not match function grid size " + std::to_string(n));
  }
  // Exact max over the n rotations.
  double best = 0.0;
  for (int r = 0; r < n; ++r) {
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      sum += ctx.mag[(k - r + n) % n] * h.samples[k].real();
    }
    best = std::max(best, sum / static_cast<double>(n));
  }
  return best;
}

double permutation_weighted_value(const GridFunction& h, const EvalContext& ctx) {
  const int n = ctx.n();
  if (h.grid.n != n) {
    throw std::invalid_argument("permutation weight grid size does not match function grid size");
  }
  Eigen::VectorXd hs = h.samples.real();
  std::sort(hs.data(), hs.data() + hs.size(), std::greater<double>());
  // Rearrangement inequality: the sup over all permutations pairs the profiles.
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += ctx.sorted[i] * hs[i];
  return sum / static_cast<double>(n);
}

double eval_context(const NormSpec& spec, const EvalContext& ctx) {
  switch (spec.kind()) {
    case NormKind::Lp:
      return lp_value(spec.as<NormSpec::Lp>().p, ctx);
    case NormKind::KyFan:
      return ky_fan_value(spec.as<NormSpec::KyFan>().t, ctx);
    case NormKind::Marcinkiewicz:
      return marcinkiewicz_value(spec.as<NormSpec::Marcinkiewicz>().u, ctx);
    case NormKind::Combo: {
      const auto& node = spec.as<NormSpec::Combo>();
      double sum = 0.0;
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        sum += node.weights[i] * eval_context(node.children[i], ctx);
      }
      return sum;
    }
    case NormKind::SupFamily: {
      const auto& node = spec.as<NormSpec::SupFamily>();
      double best = 0.0;
      for (const auto& child : node.children) best = std::max(best, eval_context(child, ctx));
      return best;
    }
    case NormKind::RotationWeighted:
      return rotation_weighted_value(spec.as<NormSpec::RotationWeighted>().h, ctx);
    case NormKind::PermutationWeighted:
      return permutation_weighted_value(spec.as<NormSpec::PermutationWeighted>().h, ctx);
  }
  throw std::logic_error("unreachable norm kind");
}

}  // namespace

double eval_norm(const NormSpec& spec, const GridFunction& f) {
  return eval_context(spec, make_context(f));
}

double eval_norm_profile(const NormSpec& spec, const Eigen::VectorXd& profile) {
  GridFunction f = make_grid_function(make_grid(static_cast<int>(profile.size())), profile);
  return eval_norm(spec, f);
}

double continuity_modulus(const NormSpec& spec, const Grid& grid) {
  if (symmetry_class(spec) == SymmetryClass::FullySymmetric) {
    return eval_norm(spec, indicator(grid, 0));
  }
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid.n; ++k) {
    best = std::min(best, eval_norm(spec, indicator(grid, k)));
  }
  return best;
}

ContinuityDecomposition decompose_continuous(const NormSpec& spec, const Grid& grid) {
  if (symmetry_class(spec) != SymmetryClass::FullySymmetric) {
    throw std::invalid_argument("decomposition requires a fully symmetric spec");
  }
  const double t = continuity_modulus(spec, grid);
  if (t >= 1.0 - 1e-12) {
    throw std::invalid_argument(
        "degenerate decomposition: norm is equivalent to the sup norm on this grid (t = 1)");
  }
  auto beta = [spec, t](const GridFunction& f) {
    return (eval_norm(spec, f) - t * norm_linf(f)) / (1.0 - t);
  };
  return ContinuityDecomposition{t, std::move(beta)};
}

bool AxiomReport::all_pass() const {
  for (const auto& check : checks) {
    if (!check.pass) return false;
  }
  return true;
}

namespace {

GridFunction random_function(const Grid& grid, Rng& rng) {
  Eigen::VectorXcd samples(grid.n);
  for (int k = 0; k < grid.n; ++k) samples[k] = rng.complex_normal();
  return GridFunction{grid, std::move(samples)};
}

// Random modulus-at-most-one multiplier.
GridFunction random_contraction(const Grid& grid, Rng& rng) {
  Eigen::VectorXcd samples(grid.n);
  for (int k = 0; k < grid.n; ++k) {
    samples[k] = std::polar(rng.uniform(), rng.uniform(0.0, 2.0 * M_PI));
  }
  return GridFunction{grid, std::move(samples)};
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.uniform_int(0, i)]);
  }
  return perm;
}

struct SlackTracker {
  double worst = std::numeric_limits<double>::infinity();
  void observe(double slack) { worst = std::min(worst, slack); }
};

}  // namespace

AxiomReport verify_axioms_on(const std::function<double(const GridFunction&)>& alpha,
                             SymmetryClass symmetry, const Grid& grid, int trials,
                             std::uint64_t seed, double invariance_tol) {
  if (trials < 1) throw std::invalid_argument("verify_axioms needs trials >= 1");
  Rng rng(seed);
  SlackTracker monotone, multiplier, sandwich_lo, sandwich_hi, triangle, homogeneity, invariance,
      shrinking;

  for (int trial = 0; trial < trials; ++trial) {
    const GridFunction g = random_function(grid, rng);
    const GridFunction u = random_contraction(grid, rng);
    const GridFunction f = pointwise_product(g, u);
    const GridFunction g2 = random_function(grid, rng);

    const double ag = alpha(g);
    const double af = alpha(f);
    monotone.observe(ag - af);
    multiplier.observe(ag * norm_linf(u) - af);
    sandwich_lo.observe(ag - norm_l1(g));
    sandwich_hi.observe(norm_linf(g) - ag);
    triangle.observe(ag + alpha(g2) -
                     alpha(GridFunction{grid, g.samples + g2.samples}));

    const Complex lambda = rng.complex_normal();
    const GridFunction scaled{grid, (lambda * g.samples.array()).matrix()};
    homogeneity.observe(-std::abs(alpha(scaled) - std::abs(lambda) * ag));

    if (symmetry == SymmetryClass::FullySymmetric) {
      const std::vector<int> perm = random_permutation(grid.n, rng);
      Eigen::VectorXcd shuffled(grid.n);
      for (int k = 0; k < grid.n; ++k) shuffled[k] = g.samples[perm[k]];
      invariance.observe(-std::abs(alpha(GridFunction{grid, std::move(shuffled)}) - ag));
    } else {
      const int r = rng.uniform_int(0, grid.n - 1);
      invariance.observe(-std::abs(alpha(rotate(g, r)) - ag));
    }

    // Continuity proxy: alpha(g chi_E) shrinks monotonically along a nested
    // chain of index sets and obeys the multiplier bound against alpha(chi_E).
    std::vector<int> order = random_permutation(grid.n, rng);
    double previous = std::numeric_limits<double>::infinity();
    for (int size = grid.n; size >= 1; size /= 2) {
      const std::vector<int> subset(order.begin(), order.begin() + size);
      const GridFunction chi = indicator(grid, subset);
      const double restricted = alpha(pointwise_product(g, chi));
      shrinking.observe(previous - restricted);
      shrinking.observe(norm_linf(g) * alpha(chi) - restricted);
      previous = restricted;
    }
  }

  // Rotated-indicator averaging example: the mean of all rotations of
  // n*chi_{0} is the constant 1, whose norm cannot exceed the spike's.
  SlackTracker dct;
  {
    const GridFunction spike{grid, Eigen::VectorXcd::Unit(grid.n, 0) * static_cast<double>(grid.n)};
    Eigen::VectorXcd avg = Eigen::VectorXcd::Zero(grid.n);
    for (int r = 0; r < grid.n; ++r) {
      avg += rotate(spike, r).samples / static_cast<double>(grid.n);
    }
    const double alpha_avg = alpha(GridFunction{grid, std::move(avg)});
    dct.observe(-std::abs(alpha_avg - 1.0));
    dct.observe(alpha(spike) - alpha_avg);
  }

  const double tol = 1e-12;
  AxiomReport report;
  auto add = [&](const std::string& name, const SlackTracker& tracker, double pass_tol,
                 int count) {
    report.checks.push_back(PropertyCheck{name, tracker.worst >= -pass_tol, tracker.worst, count});
  };
  add("monotonicity", monotone, tol, trials);
  add("multiplier_bound", multiplier, tol, trials);
  add("sandwich_lower", sandwich_lo, tol, trials);
  add("sandwich_upper", sandwich_hi, tol, trials);
  add("triangle_inequality", triangle, tol, trials);
  add("homogeneity", homogeneity, tol, trials);
  add("symmetry_invariance", invariance, invariance_tol, trials);
  add("shrinking_indicator", shrinking, tol, trials);
  add("rotated_indicator_average", dct, tol, 1);
  return report;
}

AxiomReport verify_axioms(const NormSpec& spec, const Grid& grid, int trials, std::uint64_t seed) {
  auto alpha = [&spec](const GridFunction& f) { return eval_norm(spec, f); };
  // Evaluation reduces to the sorted magnitude profile, so the symmetry
  // invariance holds bitwise, not just to rounding.
  return verify_axioms_on(alpha, symmetry_class(spec), grid, trials, seed, 0.0);
}

}  // namespace symnorm
