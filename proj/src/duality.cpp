#include "symnorm/duality.hpp"

#include "symnorm/hardy_factorization.hpp"
#include "symnorm/linear_program.hpp"
#include "symnorm/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace symnorm {

Complex pairing(const GridFunction& f, const GridFunction& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("grid mismatch in pairing");
  return f.samples.cwiseProduct(g.samples).sum() / static_cast<double>(f.grid.n);
}

namespace {

// ---------------------------------------------------------------------------
// Polyhedral profile constraints.  For a nonincreasing nonnegative profile g,
// each polyhedral atom satisfies alpha(g) = max_b <w_b, g> over finitely many
// nonnegative rows w_b.
// ---------------------------------------------------------------------------

Eigen::VectorXd ky_fan_row(double t, int n) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  const double tn = t * static_cast<double>(n);
  int k = static_cast<int>(std::floor(tn));
  if (k >= n) {
    w.setConstant(1.0 / (t * static_cast<double>(n)));
    return w;
  }
  for (int i = 0; i < k; ++i) w[i] = 1.0 / (t * static_cast<double>(n));
  w[k] = (t - static_cast<double>(k) / static_cast<double>(n)) / t;
  return w;
}

double marcinkiewicz_weight(const Eigen::VectorXd& u, double t) {
  const int nu = static_cast<int>(u.size());
  const double x = t * static_cast<double>(nu);
  if (x <= 1.0) return u[0] * x;
  if (x >= static_cast<double>(nu)) return u[nu - 1];
  const int j = static_cast<int>(std::floor(x));
  const double frac = x - static_cast<double>(j);
  return u[j - 1] * (1.0 - frac) + u[j] * frac;
}

std::vector<Eigen::VectorXd> atom_profile_rows(const NormSpec& spec, int n) {
  switch (spec.kind()) {
    case NormKind::Lp: {
      const double p = spec.as<NormSpec::Lp>().p;
      if (p == 1.0) {
        return {Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n))};
      }
      if (std::isinf(p)) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
        w[0] = 1.0;
        return {w};
      }
      throw std::logic_error("Lp atom with 1 < p < inf is not polyhedral");
    }
    case NormKind::KyFan:
      return {ky_fan_row(spec.as<NormSpec::KyFan>().t, n)};
    case NormKind::Marcinkiewicz: {
      const Eigen::VectorXd& u = spec.as<NormSpec::Marcinkiewicz>().u;
      std::vector<Eigen::VectorXd> rows;
      const int nu = static_cast<int>(u.size());
      rows.reserve(n + nu);
      for (int k = 1; k <= n; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(n);
        rows.push_back(marcinkiewicz_weight(u, t) * ky_fan_row(t, n));
      }
      for (int j = 1; j <= nu; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(nu);
        rows.push_back(marcinkiewicz_weight(u, t) * ky_fan_row(t, n));
      }
      return rows;
    }
    case NormKind::PermutationWeighted: {
      const GridFunction& h = spec.as<NormSpec::PermutationWeighted>().h;
      if (h.grid.n != n) throw std::invalid_argument("permutation weight grid mismatch");
      Eigen::VectorXd hs = h.samples.real();
      std::sort(hs.data(), hs.data() + hs.size(), std::greater<double>());
      return {hs / static_cast<double>(n)};
    }
    default:
      throw std::logic_error("not a polyhedral atom");
  }
}

bool lp_representable_impl(const NormSpec& spec) {
  switch (spec.kind()) {
    case NormKind::Lp: {
      const double p = spec.as<NormSpec::Lp>().p;
      return p == 1.0 || std::isinf(p);
    }
    case NormKind::KyFan:
    case NormKind::Marcinkiewicz:
    case NormKind::PermutationWeighted:
      return true;
    case NormKind::Combo: {
      for (const auto& child : spec.as<NormSpec::Combo>().children) {
        if (!lp_representable_impl(child)) return false;
      }
      return true;
    }
    case NormKind::SupFamily: {
      for (const auto& child : spec.as<NormSpec::SupFamily>().children) {
        if (!lp_representable_impl(child)) return false;
      }
      return true;
    }
    case NormKind::RotationWeighted:
      return false;
  }
  return false;
}

// Builds the LP encoding of { alpha(g) <= 1, g nonincreasing >= 0 } in the
// difference variables d_j = g_j - g_{j+1} >= 0 (g = T d with T upper
// triangular of ones).  Combo children introduce one bound variable each;
// sup families and atoms contribute rows directly.
struct BallEncoder {
  int n;
  int num_aux = 0;
  struct PendingRow {
    Eigen::VectorXd d_part;           // prefix-summed row over d
    std::vector<std::pair<int, double>> aux_part;  // (aux index, coefficient)
    double rhs = 0.0;
  };
  std::vector<PendingRow> rows;

  explicit BallEncoder(int n_in) : n(n_in) {}

  static Eigen::VectorXd prefix_sums(const Eigen::VectorXd& w) {
    Eigen::VectorXd a(w.size());
    double run = 0.0;
    for (Eigen::Index j = 0; j < w.size(); ++j) {
      run += w[j];
      a[j] = run;
    }
    return a;
  }

  // Encodes alpha_spec(g) <= bound, where bound is the constant 1 when
  // aux < 0 and the aux variable otherwise.
  void encode(const NormSpec& spec, int aux) {
    switch (spec.kind()) {
      case NormKind::SupFamily: {
        for (const auto& child : spec.as<NormSpec::SupFamily>().children) encode(child, aux);
        return;
      }
      case NormKind::Combo: {
        const auto& node = spec.as<NormSpec::Combo>();
        PendingRow sum_row;
        sum_row.d_part = Eigen::VectorXd::Zero(n);
        sum_row.rhs = aux < 0 ? 1.0 : 0.0;
        if (aux >= 0) sum_row.aux_part.push_back({aux, -1.0});
        for (std::size_t i = 0; i < node.children.size(); ++i) {
          const double weight = node.weights[i];
          const NormSpec& child = node.children[i];
          std::vector<Eigen::VectorXd> child_rows;
          bool single = false;
          if (child.kind() != NormKind::Combo && child.kind() != NormKind::SupFamily) {
            child_rows = atom_profile_rows(child, n);
            single = child_rows.size() == 1;
          }
          if (single) {
            sum_row.d_part += weight * prefix_sums(child_rows[0]);
          } else {
            const int child_aux = num_aux++;
            sum_row.aux_part.push_back({child_aux, weight});
            encode(child, child_aux);
          }
        }
        rows.push_back(std::move(sum_row));
        return;
      }
      default: {
        for (const Eigen::VectorXd& w : atom_profile_rows(spec, n)) {
          PendingRow row;
          row.d_part = prefix_sums(w);
          row.rhs = aux < 0 ? 1.0 : 0.0;
          if (aux >= 0) row.aux_part.push_back({aux, -1.0});
          rows.push_back(std::move(row));
        }
        return;
      }
    }
  }

  LpProblem finalize(const Eigen::VectorXd& objective_d) const {
    const int vars = n + num_aux;
    LpProblem lp;
    lp.A = Eigen::MatrixXd::Zero(static_cast<int>(rows.size()), vars);
    lp.b = Eigen::VectorXd::Zero(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      lp.A.row(static_cast<int>(i)).head(n) = rows[i].d_part.transpose();
      for (const auto& [aux, coeff] : rows[i].aux_part) {
        lp.A(static_cast<int>(i), n + aux) = coeff;
      }
      lp.b[static_cast<int>(i)] = rows[i].rhs;
    }
    lp.c = Eigen::VectorXd::Zero(vars);
    lp.c.head(n) = objective_d;
    return lp;
  }
};

Eigen::VectorXd profile_from_differences(const Eigen::VectorXd& d) {
  const int n = static_cast<int>(d.size());
  Eigen::VectorXd g(n);
  double run = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    run += std::max(0.0, d[i]);
    g[i] = run;
  }
  return g;
}

// Places a nonincreasing profile back into sample order so that its i-th
// largest entry sits where |f| has its i-th largest magnitude.
GridFunction profile_to_witness(const Eigen::VectorXd& profile, const GridFunction& f) {
  const RearrangedProfile arrangement = rearrange(f);
  Eigen::VectorXcd samples(f.grid.n);
  for (int i = 0; i < f.grid.n; ++i) {
    samples[arrangement.perm[i]] = profile[i];
  }
  return GridFunction{f.grid, std::move(samples)};
}

GridFunction abs_function(const GridFunction& f) {
  return GridFunction{f.grid, magnitudes(f).cast<Complex>()};
}

DualEvaluation finish_with_witness(const NormSpec& spec, const GridFunction& f,
                                   GridFunction witness, double gap, DualMethod method) {
  const double alpha_w = eval_norm(spec, witness);
  if (alpha_w > 1.0) {
    witness.samples /= alpha_w;
  }
  DualEvaluation eval;
  eval.value = pairing(abs_function(f), abs_function(witness)).real();
  eval.witness = std::move(witness);
  eval.gap = gap;
  eval.method = method;
  return eval;
}

// ---------------------------------------------------------------------------
// Closed form: the dual of Lp is Lq with the Hoelder-equality witness.
// ---------------------------------------------------------------------------

double dual_exponent(double p) {
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

DualEvaluation dual_norm_lp_closed_form(double p, const GridFunction& f) {
  const int n = f.grid.n;
  const Eigen::VectorXd mag = magnitudes(f);
  const double q = dual_exponent(p);

  Eigen::VectorXd witness(n);
  if (p == 1.0) {
    int best = 0;
    for (int k = 1; k < n; ++k) {
      if (mag[k] > mag[best]) best = k;
    }
    witness.setZero();
    witness[best] = static_cast<double>(n);
  } else if (std::isinf(p)) {
    witness.setOnes();
  } else {
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += std::pow(mag[k], q);
    const double norm_q = std::pow(sum / static_cast<double>(n), 1.0 / q);
    if (norm_q == 0.0) {
      witness.setOnes();
    } else {
      for (int k = 0; k < n; ++k) witness[k] = std::pow(mag[k] / norm_q, q - 1.0);
    }
  }
  return finish_with_witness(NormSpec::lp(p), f,
                             GridFunction{f.grid, witness.cast<Complex>()}, 0.0,
                             DualMethod::ClosedForm);
}

// ---------------------------------------------------------------------------
// LP backend over nonincreasing profiles (fully symmetric polyhedral specs).
// ---------------------------------------------------------------------------

LpProblem build_profile_program(const NormSpec& spec, const GridFunction& f) {
  const int n = f.grid.n;
  const Eigen::VectorXd f_star = rearrange(f).values;
  BallEncoder encoder(n);
  encoder.encode(spec, -1);
  return encoder.finalize(BallEncoder::prefix_sums(f_star / static_cast<double>(n)));
}

DualEvaluation dual_norm_profile_lp(const NormSpec& spec, const GridFunction& f) {
  const int n = f.grid.n;
  const LpProblem lp = build_profile_program(spec, f);
  const LpSolution solution = solve_lp(lp);
  if (!solution.optimal) {
    throw std::runtime_error("dual-norm LP did not reach optimality");
  }
  const Eigen::VectorXd profile = profile_from_differences(solution.x.head(n));
  return finish_with_witness(spec, f, profile_to_witness(profile, f), 0.0, DualMethod::LP);
}

// Plain rotation-weighted balls are polytopes in the full sample space
// (one row per rotation), so they get an exact LP as well.
DualEvaluation dual_norm_rotation_lp(const NormSpec& spec, const GridFunction& f) {
  const GridFunction& h = spec.as<NormSpec::RotationWeighted>().h;
  const int n = f.grid.n;
  if (h.grid.n != n) throw std::invalid_argument("rotation weight grid mismatch");

  LpProblem lp;
  lp.A.resize(n, n);
  for (int r = 0; r < n; ++r) {
    for (int m = 0; m < n; ++m) {
      lp.A(r, m) = h.samples[(m + r) % n].real() / static_cast<double>(n);
    }
  }
  lp.b = Eigen::VectorXd::Ones(n);
  lp.c = magnitudes(f) / static_cast<double>(n);
  const LpSolution solution = solve_lp(lp);
  if (!solution.optimal) {
    throw std::runtime_error("rotation-weighted dual LP did not reach optimality");
  }
  const Eigen::VectorXd g = solution.x.cwiseMax(0.0);
  return finish_with_witness(spec, f, GridFunction{f.grid, g.cast<Complex>()}, 0.0,
                             DualMethod::LP);
}

// ---------------------------------------------------------------------------
// Projected gradient fallback: maximize the linear pairing over the alpha-ball
// by ascent along the objective, projection onto the feasible cone, and radial
// rescaling onto the ball.  Multi-start; the gap is a stagnation estimate.
// ---------------------------------------------------------------------------

Eigen::VectorXd project_nonincreasing(Eigen::VectorXd v) {
  const int n = static_cast<int>(v.size());
  std::vector<double> value(n);
  std::vector<int> count(n);
  int blocks = 0;
  for (int i = 0; i < n; ++i) {
    value[blocks] = v[i];
    count[blocks] = 1;
    ++blocks;
    while (blocks > 1 && value[blocks - 2] < value[blocks - 1]) {
      const int c1 = count[blocks - 2];
      const int c2 = count[blocks - 1];
      value[blocks - 2] = (value[blocks - 2] * c1 + value[blocks - 1] * c2) / (c1 + c2);
      count[blocks - 2] = c1 + c2;
      --blocks;
    }
  }
  int pos = 0;
  for (int b = 0; b < blocks; ++b) {
    for (int c = 0; c < count[b]; ++c) v[pos++] = std::max(0.0, value[b]);
  }
  return v;
}

struct PgProblem {
  Eigen::VectorXd objective;  // maximize objective . g
  bool monotone = false;      // constrain g to the nonincreasing cone
};

DualEvaluation dual_norm_projected_gradient(const NormSpec& spec, const GridFunction& f) {
  const int n = f.grid.n;
  const bool fully_symmetric = symmetry_class(spec) == SymmetryClass::FullySymmetric;
  const Eigen::VectorXd mag = magnitudes(f);
  const Eigen::VectorXd f_star = rearrange(f).values;
  const Eigen::VectorXd& objective = fully_symmetric ? f_star : mag;

  auto ball_norm = [&](const Eigen::VectorXd& g) {
    return eval_norm(spec, GridFunction{f.grid, g.cast<Complex>()});
  };
  auto feasible = [&](Eigen::VectorXd g) {
    if (fully_symmetric) {
      g = project_nonincreasing(std::move(g));
    } else {
      g = g.cwiseMax(0.0);
    }
    const double a = ball_norm(g);
    if (a > 1.0) g /= a;
    return g;
  };

  std::vector<Eigen::VectorXd> starts;
  for (int k = 1; k <= n; k *= 2) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
    if (fully_symmetric) {
      g.head(k).setOnes();
    } else {
      // Indicator of the k largest magnitudes of |f|.
      const RearrangedProfile arrangement = rearrange(f);
      for (int i = 0; i < k; ++i) g[arrangement.perm[i]] = 1.0;
    }
    starts.push_back(feasible(std::move(g)));
  }
  if (objective.maxCoeff() > 0.0) {
    starts.push_back(feasible(objective / objective.maxCoeff()));
  }
  if (!fully_symmetric) {
    // Rotation-orbit starts for cyclic-only symmetry.
    const int stride = std::max(1, n / 16);
    Eigen::VectorXd base = mag;
    for (int r = 0; r < n; r += stride) {
      Eigen::VectorXd g(n);
      for (int k = 0; k < n; ++k) g[k] = base[(k - r + n) % n];
      starts.push_back(feasible(std::move(g)));
    }
  }

  const int budget = 200 * n;
  const double norm_obj = objective.norm();
  double best_value = 0.0;
  Eigen::VectorXd best_g = starts.front();
  double gap = 0.0;

  for (const Eigen::VectorXd& start : starts) {
    Eigen::VectorXd g = start;
    double value = objective.dot(g) / static_cast<double>(n);
    double local_best = value;
    Eigen::VectorXd local_best_g = g;
    double last_window_best = value;
    double stagnation = std::numeric_limits<double>::infinity();
    const int window = 50;
    for (int it = 0; it < budget; ++it) {
      const double step = 1.0 / (norm_obj + 1e-30) / (1.0 + static_cast<double>(it) / 50.0);
      g = feasible(g + step * objective);
      value = objective.dot(g) / static_cast<double>(n);
      if (value > local_best) {
        local_best = value;
        local_best_g = g;
      }
      if ((it + 1) % window == 0) {
        stagnation = local_best - last_window_best;
        last_window_best = local_best;
        if (stagnation <= 1e-12 * std::max(1.0, local_best)) break;
      }
    }
    if (local_best > best_value) {
      best_value = local_best;
      best_g = local_best_g;
      gap = std::max(0.0, stagnation);
    }
  }

  GridFunction witness = fully_symmetric ? profile_to_witness(best_g, f)
                                         : GridFunction{f.grid, best_g.cast<Complex>()};
  return finish_with_witness(spec, f, std::move(witness), gap,
                             DualMethod::ProjectedGradient);
}

}  // namespace

bool lp_representable(const NormSpec& spec) { return lp_representable_impl(spec); }

LpProblem dual_norm_profile_program(const NormSpec& spec, const GridFunction& f) {
  if (!lp_representable(spec)) {
    throw std::invalid_argument("spec is not profile-polyhedral");
  }
  return build_profile_program(spec, f);
}

DualEvaluation dual_norm_best_effort(const NormSpec& spec, const GridFunction& f) {
  if (norm_linf(f) == 0.0) {
    DualEvaluation eval;
    eval.value = 0.0;
    eval.witness = constant_function(f.grid, 1.0);
    eval.gap = 0.0;
    eval.method = DualMethod::ProjectedGradient;
    return eval;
  }
  return dual_norm_projected_gradient(spec, f);
}

DualEvaluation dual_norm(const NormSpec& spec, const GridFunction& f) {
  if (norm_linf(f) == 0.0) {
    DualEvaluation eval;
    eval.value = 0.0;
    eval.witness = constant_function(f.grid, 1.0);
    eval.gap = 0.0;
    eval.method = DualMethod::ClosedForm;
    return eval;
  }
  if (spec.kind() == NormKind::Lp) {
    return dual_norm_lp_closed_form(spec.as<NormSpec::Lp>().p, f);
  }
  if (lp_representable(spec)) {
    return dual_norm_profile_lp(spec, f);
  }
  if (spec.kind() == NormKind::RotationWeighted) {
    return dual_norm_rotation_lp(spec, f);
  }
  return dual_norm_projected_gradient(spec, f);
}

namespace {

// Bidual of a profile-polyhedral spec in a single exact LP.  Writing the
// alpha-ball as { G x <= b, x >= 0 } in difference variables, LP duality turns
// the membership alpha'(g) <= 1 into the existence of multipliers y >= 0 with
// b.y <= 1 and G'y dominating the cumulative sums of g/n.  Maximizing the
// pairing jointly over (g, y) is then one linear program, and the resulting
// profile is re-certified through the first-level dual_norm machinery.
double bidual_polyhedral(const NormSpec& spec, const GridFunction& f) {
  const int n = f.grid.n;
  const Eigen::VectorXd f_star = rearrange(f).values;

  BallEncoder encoder(n);
  encoder.encode(spec, -1);
  const int num_rows = static_cast<int>(encoder.rows.size());
  const int num_aux = encoder.num_aux;

  const int vars = n + num_rows;         // d, then y
  const int constraints = n + num_aux + 1;
  LpProblem lp;
  lp.A = Eigen::MatrixXd::Zero(constraints, vars);
  lp.b = Eigen::VectorXd::Zero(constraints);
  // (C T d)_j / n <= (G' y)_j over the profile columns.
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      lp.A(j, l) = static_cast<double>(std::min(j, l) + 1) / static_cast<double>(n);
    }
    for (int b = 0; b < num_rows; ++b) {
      lp.A(j, n + b) = -encoder.rows[b].d_part[j];
    }
  }
  // (G' y) must stay nonnegative on the bound-variable columns.
  for (int b = 0; b < num_rows; ++b) {
    for (const auto& [aux, coeff] : encoder.rows[b].aux_part) {
      lp.A(n + aux, n + b) = -coeff;
    }
  }
  // b.y <= 1.
  for (int b = 0; b < num_rows; ++b) {
    lp.A(n + num_aux, n + b) = encoder.rows[b].rhs;
  }
  lp.b[n + num_aux] = 1.0;
  lp.c = Eigen::VectorXd::Zero(vars);
  lp.c.head(n) = BallEncoder::prefix_sums(f_star / static_cast<double>(n));

  // The zero right-hand sides make the origin maximally degenerate; the
  // deterministic perturbation keeps the pivot path short and is undone by
  // the membership rescale below.
  const LpSolution solution = solve_lp(lp, 1e-11);
  if (!solution.optimal) {
    throw std::runtime_error("bidual LP did not reach optimality");
  }
  Eigen::VectorXd g = profile_from_differences(solution.x.head(n));

  const DualEvaluation membership = dual_norm(spec, GridFunction{f.grid, g.cast<Complex>()});
  if (membership.value > 1.0 + 1e-6) {
    throw std::runtime_error("bidual profile failed the dual-ball membership certificate (" +
                             std::to_string(membership.value) + ")");
  }
  if (membership.value > 1.0) g /= membership.value;
  return f_star.dot(g) / static_cast<double>(n);
}

}  // namespace

BidualCheck bidual_check(const NormSpec& spec, const GridFunction& f) {
  BidualCheck result;
  result.alpha = eval_norm(spec, f);
  if (norm_linf(f) == 0.0) {
    return result;
  }

  if (spec.kind() == NormKind::Lp) {
    const double q = dual_exponent(spec.as<NormSpec::Lp>().p);
    result.alpha_bidual = dual_norm(NormSpec::lp(q), f).value;
  } else if (lp_representable(spec)) {
    result.alpha_bidual = bidual_polyhedral(spec, f);
  } else {
    // Best-effort: radial projected ascent on the alpha'-ball, each membership
    // test one inner dual_norm call.
    const int n = f.grid.n;
    const Eigen::VectorXd f_star = rearrange(f).values;
    auto dual_value = [&](const Eigen::VectorXd& g) {
      return dual_norm(spec, GridFunction{f.grid, g.cwiseMax(0.0).cast<Complex>()}).value;
    };
    double best = 0.0;
    for (int k = 1; k <= n; k *= 2) {
      Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
      g.head(k).setOnes();
      for (int it = 0; it < 40; ++it) {
        Eigen::VectorXd candidate =
            project_nonincreasing(g + (0.5 / (1.0 + it)) * f_star / f_star.norm());
        const double a = dual_value(candidate);
        if (a > 1.0) candidate /= a;
        g = candidate;
        best = std::max(best, f_star.dot(g) / static_cast<double>(n) / std::max(1.0, dual_value(g)));
      }
    }
    result.alpha_bidual = best;
  }

  result.relative_gap = std::abs(result.alpha_bidual - result.alpha) / result.alpha;
  return result;
}

double hardy_lower_bound(const NormSpec& spec, const GridFunction& f, int trials,
                         std::uint64_t seed) {
  const MembershipResult membership = hardy_membership(f);
  if (!membership.member) {
    throw std::invalid_argument("hardy_lower_bound requires a Hardy grid function");
  }
  if (trials < 1) throw std::invalid_argument("hardy_lower_bound needs trials >= 1");

  const int n = f.grid.n;
  Rng rng(seed);
  const double eps = 1e-3;
  double best = 0.0;

  auto try_phi = [&](Eigen::VectorXd phi) {
    const double dual_value = dual_norm(spec, GridFunction{f.grid, phi.cast<Complex>()}).value;
    if (dual_value > 0.0) phi /= dual_value;
    Eigen::VectorXd mod = (phi.array() + eps) / (1.0 + eps);
    const GridFunction h = outer_from_modulus(GridFunction{f.grid, mod.cast<Complex>()});
    best = std::max(best, norm_l1(pointwise_product(f, h)));
  };

  try_phi(Eigen::VectorXd::Ones(n));
  for (int trial = 1; trial < trials; ++trial) {
    // Random nonnegative simple function: a few random levels on random blocks.
    Eigen::VectorXd phi = Eigen::VectorXd::Zero(n);
    const int levels = rng.uniform_int(1, 4);
    for (int level = 0; level < levels; ++level) {
      const double height = std::abs(rng.normal()) + 0.1;
      const int start = rng.uniform_int(0, n - 1);
      const int len = rng.uniform_int(1, n);
      for (int j = 0; j < len; ++j) phi[(start + j) % n] += height;
    }
    try_phi(std::move(phi));
  }
  return best;
}

}  // namespace symnorm
