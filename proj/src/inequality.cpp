#include "skewlab/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "skewlab/errors.hpp"

namespace skewlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kRefineStream = 0x7265666eULL;

/// Runs body(i) for i in [0, n) on up to `threads` workers; rethrows the
/// exception of the lowest failing index.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::size_t> error_index(threads, n);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < n; i += threads) {
          try {
            body(i);
          } catch (...) {
            errors[t] = std::current_exception();
            error_index[t] = i;
            return;
          }
        }
      });
    }
  }
  const auto first = std::min_element(error_index.begin(), error_index.end());
  if (*first < n) std::rethrow_exception(errors[first - error_index.begin()]);
}

double expectation_sq(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  const double c = commutator_expectation(rho, a, b);
  return c * c;
}

void require_pair(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  if (rho.dim() != a.dim() || rho.dim() != b.dim()) {
    throw DimensionError("checker: state and observables must share one dimension");
  }
}

/// Two-point link "smaller <= larger".
Verdict link(std::string name, double smaller, double larger) {
  return make_verdict(std::move(name), larger, smaller);
}

ComplexMatrix gue(std::size_t n, RandomStream& stream) {
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = stream.complex_normal();
  ComplexMatrix h = g + g.adjoint();
  h *= 0.5;
  return h;
}

struct Draw {
  DensityMatrix rho;
  Observable a;
  Observable b;
  std::optional<SkewParams> params;
};

Draw draw(const TrialConfig& cfg, std::size_t dim, std::uint64_t index) {
  RandomStream stream(cfg.seed, {dim, index});
  const SamplerConfig sampler{dim, cfg.seed, cfg.eigen_floor};
  DensityMatrix rho = sample_density(sampler, stream);
  Observable a = sample_observable(sampler, stream);
  Observable b = sample_observable(sampler, stream);
  std::optional<SkewParams> params;
  switch (cfg.target) {
    case Target::Thm21:
    case Target::Chain:
      params = SkewParams::dyson(stream.uniform());
      break;
    case Target::Thm31:
      params = sample_params(cfg.region, stream);
      break;
    default:
      break;
  }
  return {std::move(rho), std::move(a), std::move(b), params};
}

Verdict evaluate_raw(Target target, const DensityMatrix& rho, const Observable& a,
                     const Observable& b, const std::optional<SkewParams>& params) {
  switch (target) {
    case Target::Heisenberg:
      return check_heisenberg(rho, a, b);
    case Target::Schrodinger:
      return check_schrodinger(rho, a, b);
    case Target::Luo:
      return check_luo(rho, a, b);
    case Target::Thm21:
      return check_thm21(rho, a, b, params.value().alpha());
    case Target::Thm31:
      return check_thm31(rho, a, b, params.value());
    case Target::WyNaive:
      return check_wy_naive(rho, a, b);
    case Target::Chain: {
      const auto links = check_chain(rho, a, params.value().alpha());
      return *std::min_element(links.begin(), links.end(), [](const Verdict& x, const Verdict& y) {
        return x.relative_slack() < y.relative_slack();
      });
    }
  }
  throw DomainError("unknown target");
}

/// Re-applies the holds rule at tolerance `tol`.
Verdict evaluate(Target target, const DensityMatrix& rho, const Observable& a, const Observable& b,
                 const std::optional<SkewParams>& params, double tol) {
  Verdict v = evaluate_raw(target, rho, a, b, params);
  if (tol == v.tol) return v;
  return make_verdict(std::move(v.name), v.lhs, v.rhs, tol, v.asserted);
}

bool params_in_region(Target target, ParamRegion region, const SkewParams& p) {
  if (target != Target::Thm31) return p.alpha() <= 1.0;
  if (p.alpha() > 2.0 || p.beta() > 2.0) return false;
  switch (region) {
    case ParamRegion::Asserted:
      return p.asserted();
    case ParamRegion::Gap:
      return p.region() == Region::Gap;
    case ParamRegion::Any:
      return true;
  }
  return false;
}

DensityMatrix perturb_state(const DensityMatrix& rho, double step, double floor,
                            RandomStream& stream) {
  const std::size_t n = rho.dim();
  ComplexMatrix x = rho.power(0.5);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      x(i, j) += step * stream.complex_normal() / std::sqrt(static_cast<double>(n));
  ComplexMatrix w = x * x.adjoint();
  w *= 1.0 / w.trace().real();
  if (floor > 0.0 && eig_hermitian(w).eigenvalues.front() < floor) {
    const double eps = static_cast<double>(n) * floor;
    w *= 1.0 - eps;
    for (std::size_t i = 0; i < n; ++i) w(i, i) += eps / static_cast<double>(n);
  }
  return validate_density(w, floor);
}

}  // namespace

double Verdict::scale() const noexcept {
  return std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

double Verdict::relative_slack() const noexcept { return slack / scale(); }

Verdict make_verdict(std::string name, double lhs, double rhs, double tol, bool asserted) {
  Verdict v;
  v.name = std::move(name);
  v.lhs = lhs;
  v.rhs = rhs;
  v.slack = lhs - rhs;
  v.tol = tol;
  v.asserted = asserted;
  v.holds = v.slack >= -tol * v.scale();
  return v;
}

double commutator_expectation(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_pair(rho, a, b);
  return std::abs(trace_product({rho.matrix(), commutator(a.matrix(), b.matrix())}));
}

double commutator_expectation_spectral(const DensityMatrix& rho, const Observable& a,
                                       const Observable& b) {
  require_pair(rho, a, b);
  const auto& spectrum = rho.spectrum();
  const ComplexMatrix a0 = spectrum.to_eigenbasis(center(rho, a).matrix);
  const ComplexMatrix b0 = spectrum.to_eigenbasis(center(rho, b).matrix);
  const auto& lambda = spectrum.eigenvalues;
  double total = 0.0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j)
      total += (lambda[i] - lambda[j]) * (a0(i, j) * b0(j, i)).imag();
  return 2.0 * std::abs(total);
}

Verdict check_heisenberg(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_pair(rho, a, b);
  return make_verdict("heisenberg", variance(rho, a) * variance(rho, b),
                      0.25 * expectation_sq(rho, a, b));
}

Verdict check_schrodinger(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_pair(rho, a, b);
  // Symmetrized covariance Re Tr[rho A0 B0]; with the full complex modulus the bound fails
  // (rho = diag(0.9, 0.1), sigma_x, sigma_y gives 0.36 >= 0.64).
  const double cov = covariance(rho, a, b).real();
  return make_verdict("schrodinger", variance(rho, a) * variance(rho, b) - cov * cov,
                      0.25 * expectation_sq(rho, a, b));
}

Verdict check_luo(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_pair(rho, a, b);
  return make_verdict("luo", u_luo(rho, a, 0.5) * u_luo(rho, b, 0.5),
                      0.25 * expectation_sq(rho, a, b));
}

Verdict check_thm21(const DensityMatrix& rho, const Observable& a, const Observable& b,
                    double alpha) {
  require_pair(rho, a, b);
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("check_thm21: alpha outside [0, 1]");
  return make_verdict("thm21", u_luo(rho, a, alpha) * u_luo(rho, b, alpha),
                      alpha * (1.0 - alpha) * expectation_sq(rho, a, b));
}

Verdict check_thm31(const DensityMatrix& rho, const Observable& a, const Observable& b,
                    const SkewParams& p) {
  require_pair(rho, a, b);
  return make_verdict("thm31", u_geo(rho, a, p) * u_geo(rho, b, p),
                      p.alpha() * p.beta() * expectation_sq(rho, a, b), kHoldsTol, p.asserted());
}

Verdict check_wy_naive(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_pair(rho, a, b);
  const SkewParams wy = SkewParams::wigner_yanase();
  return make_verdict("wy_naive", skew_I(rho, a, wy) * skew_I(rho, b, wy),
                      0.25 * expectation_sq(rho, a, b), kHoldsTol, false);
}

std::vector<Verdict> check_chain(const DensityMatrix& rho, const Observable& h, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("check_chain: alpha outside [0, 1]");
  const SkewParams wy = SkewParams::wigner_yanase();
  const SkewParams wyd = SkewParams::dyson(alpha);
  const double v = variance(rho, h);
  const double i_half = skew_I(rho, h, wy);
  const double j_half = skew_J(rho, h, wy);
  const double u_half = u_luo(rho, h, 0.5);
  const double i_alpha = skew_I(rho, h, wyd);
  const double j_alpha = skew_J(rho, h, wyd);
  const double u_alpha = u_luo(rho, h, alpha);
  const double tr_half = trace_product({rho.power(0.5), h.matrix(), rho.power(0.5), h.matrix()}).real();
  const double tr_alpha =
      trace_product({rho.power(alpha), h.matrix(), rho.power(1.0 - alpha), h.matrix()}).real();

  return {
      link("wy_nonneg", 0.0, i_half),
      link("wy_le_luo", i_half, u_half),
      link("luo_le_variance", u_half, v),
      link("wyd_le_wy", i_alpha, i_half),
      link("wy_le_wy_dual", i_half, j_half),
      link("wy_dual_le_wyd_dual", j_half, j_alpha),
      link("wyd_nonneg", 0.0, i_alpha),
      link("wyd_le_luo_wyd", i_alpha, u_alpha),
      link("luo_wyd_le_luo", u_alpha, u_half),
      link("trace_power_ordering", tr_half, tr_alpha),
  };
}

Verdict check_weight_product(double lambda_i, double lambda_j, const SkewParams& p, double tol) {
  const double base = lambda_i + lambda_j + f_weight(lambda_i, lambda_j, p.sum());
  const double cross = f_weight(lambda_i, lambda_j, p.alpha()) + f_weight(lambda_i, lambda_j, p.beta());
  const double gap = lambda_i - lambda_j;
  return make_verdict("weight_product", base * base - cross * cross,
                      16.0 * p.alpha() * p.beta() * gap * gap, tol, p.asserted());
}

Verdict scalar_lemma33(double t, double alpha, double beta) {
  if (!(t > 0.0)) throw DomainError("scalar_lemma33: t must be positive");
  const SkewParams p(alpha, beta);
  const double head = std::pow(t, 1.0 - alpha - beta) + 1.0;
  const double lhs = head * head * (std::pow(t, 2.0 * alpha) - 1.0) * (std::pow(t, 2.0 * beta) - 1.0);
  const double rhs = 16.0 * alpha * beta * (t - 1.0) * (t - 1.0);
  return make_verdict("scalar_lemma33", lhs, rhs, kHoldsTol, p.asserted());
}

FactorizationCheck scalar_factorization(double t, double alpha, double beta) {
  if (!(t > 0.0)) throw DomainError("scalar_factorization: t must be positive");
  const SkewParams p(alpha, beta);
  const double k = p.sum();
  const double head = std::pow(t, 1.0 - k) + 1.0;
  FactorizationCheck out;
  out.product = head * head * (std::pow(t, 2.0 * alpha) - 1.0) * (std::pow(t, 2.0 * beta) - 1.0);
  const double plus = t + 1.0 + std::pow(t, k) + std::pow(t, 1.0 - k);
  const double minus = std::pow(t, alpha) + std::pow(t, 1.0 - alpha) + std::pow(t, beta) +
                       std::pow(t, 1.0 - beta);
  out.difference = plus * plus - minus * minus;
  out.residual = std::abs(out.product - out.difference);
  out.scale = std::max({1.0, std::abs(out.product), std::abs(out.difference)});
  return out;
}

ScalarFCheck scalar_f(double t, double k) {
  if (!(t >= 1.0)) throw DomainError("scalar_f: t must be >= 1");
  if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("scalar_f: k must be >= 0");
  const double lhs = (std::pow(t, 1.0 - k) + 1.0) * (std::pow(t, k) - 1.0);
  const double rhs = 2.0 * k * (t - 1.0);
  return {lhs - rhs, make_verdict("scalar_f", lhs, rhs, 1e-12, k >= 1.0 || k <= 0.5)};
}

Verdict scalar_prior(double p, double s) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("scalar_prior: p outside [0, 1]");
  if (!(s >= 1.0)) throw DomainError("scalar_prior: s must be >= 1");
  const double lhs = (1.0 - 2.0 * p) * (1.0 - 2.0 * p) * (s - 1.0) * (s - 1.0);
  const double d = std::pow(s, p) - std::pow(s, 1.0 - p);
  return make_verdict("scalar_prior", lhs, d * d);
}

// ---------------------------------------------------------------------------

Target parse_target(std::string_view name) {
  if (name == "heisenberg") return Target::Heisenberg;
  if (name == "schrodinger") return Target::Schrodinger;
  if (name == "luo") return Target::Luo;
  if (name == "thm21") return Target::Thm21;
  if (name == "thm31") return Target::Thm31;
  if (name == "wy-naive" || name == "wy_naive") return Target::WyNaive;
  if (name == "chain") return Target::Chain;
  throw DomainError("unknown inequality '" + std::string(name) + "'");
}

std::string_view to_string(Target target) noexcept {
  switch (target) {
    case Target::Heisenberg:
      return "heisenberg";
    case Target::Schrodinger:
      return "schrodinger";
    case Target::Luo:
      return "luo";
    case Target::Thm21:
      return "thm21";
    case Target::Thm31:
      return "thm31";
    case Target::WyNaive:
      return "wy-naive";
    case Target::Chain:
      return "chain";
  }
  return "";
}

bool target_asserted(Target target) noexcept { return target != Target::WyNaive; }

ParamRegion parse_param_region(std::string_view name) {
  if (name == "asserted") return ParamRegion::Asserted;
  if (name == "gap") return ParamRegion::Gap;
  if (name == "any") return ParamRegion::Any;
  throw DomainError("unknown parameter region '" + std::string(name) + "'");
}

std::string_view to_string(ParamRegion region) noexcept {
  switch (region) {
    case ParamRegion::Asserted:
      return "asserted";
    case ParamRegion::Gap:
      return "gap";
    case ParamRegion::Any:
      return "any";
  }
  return "";
}

SkewParams sample_params(ParamRegion region, RandomStream& stream) {
  switch (region) {
    case ParamRegion::Asserted: {
      if (stream.uniform() < 0.5) {
        double a = stream.uniform(0.0, 0.5);
        double b = stream.uniform(0.0, 0.5);
        if (a + b > 0.5) {
          a = 0.5 - a;
          b = 0.5 - b;
        }
        return {a, b};
      }
      for (;;) {
        const double a = stream.uniform(0.0, 2.0);
        const double b = stream.uniform(0.0, 2.0);
        if (a + b >= 1.0) return {a, b};
      }
    }
    case ParamRegion::Gap:
      for (;;) {
        const double a = stream.uniform(0.0, 1.0);
        const double b = stream.uniform(0.0, 1.0);
        if (classify_region(a, b) == Region::Gap) return {a, b};
      }
    case ParamRegion::Any:
      break;
  }
  const double a = stream.uniform(0.0, 2.0);
  const double b = stream.uniform(0.0, 2.0);
  return {a, b};
}

TrialRecord evaluate_trial(const TrialConfig& cfg, std::size_t dim, std::uint64_t index,
                           bool keep_witness) {
  Draw d = draw(cfg, dim, index);
  TrialRecord record;
  record.target = cfg.target;
  record.seed = cfg.seed;
  record.trial_index = index;
  record.dim = dim;
  record.eigen_floor = cfg.eigen_floor;
  record.params = d.params;
  record.verdict = evaluate(cfg.target, d.rho, d.a, d.b, d.params, cfg.tol);
  if (keep_witness) record.witness = Witness{d.rho.matrix(), d.a.matrix(), d.b.matrix()};
  return record;
}

Verdict replay(const TrialRecord& record) {
  if (!record.witness) throw DomainError("replay: record carries no witness payload");
  const DensityMatrix rho = validate_density(record.witness->rho, record.eigen_floor);
  return evaluate(record.target, rho, Observable(record.witness->a), Observable(record.witness->b),
                  record.params, record.verdict.tol);
}

TrialAggregate run_trials(const TrialConfig& cfg) {
  if (cfg.dims.empty()) throw DomainError("run_trials: no dimensions given");
  if (cfg.trials_per_dim < 1) throw DomainError("run_trials: trials per dim must be >= 1");
  for (std::size_t d : cfg.dims)
    if (d < 1) throw DomainError("run_trials: dimensions must be >= 1");

  const std::size_t per = cfg.trials_per_dim;
  const std::size_t total = cfg.dims.size() * per;
  std::vector<Verdict> verdicts(total);
  parallel_for(total, cfg.threads, [&](std::size_t k) {
    verdicts[k] = evaluate_trial(cfg, cfg.dims[k / per], k % per).verdict;
  });

  TrialAggregate agg;
  agg.target = cfg.target;
  agg.region = cfg.region;
  agg.seed = cfg.seed;
  agg.dims = cfg.dims;
  agg.trials = total;
  agg.min_slack = kInf;
  agg.min_relative_slack = kInf;
  std::size_t worst = 0;
  for (std::size_t k = 0; k < total; ++k) {
    const Verdict& v = verdicts[k];
    if (!v.holds) ++agg.violations;
    agg.min_slack = std::min(agg.min_slack, v.slack);
    if (v.relative_slack() < agg.min_relative_slack) {
      agg.min_relative_slack = v.relative_slack();
      worst = k;
    }
  }
  agg.worst = evaluate_trial(cfg, cfg.dims[worst / per], worst % per, true);
  return agg;
}

namespace {

// Local refinement: Gaussian perturbations with a shrinking step, accepted only when
// they lower the relative slack. Returns the number of accepted moves.
std::size_t refine(const HuntConfig& cfg, std::uint64_t index, Draw& current, double& best) {
  RandomStream stream(cfg.seed, {cfg.dim, index, kRefineStream});
  std::size_t accepted = 0;
  double step = 0.2;
  for (std::size_t s = 0; s < cfg.refine_steps; ++s, step *= 0.97) {
    DensityMatrix rho = perturb_state(current.rho, step, cfg.eigen_floor, stream);
    Observable a(current.a.matrix() + step * gue(cfg.dim, stream));
    Observable b(current.b.matrix() + step * gue(cfg.dim, stream));
    std::optional<SkewParams> params = current.params;
    if (params) {
      const double na = std::max(0.0, params->alpha() + step * 0.1 * stream.normal());
      const double nb = cfg.target == Target::Thm31
                            ? std::max(0.0, params->beta() + step * 0.1 * stream.normal())
                            : 1.0 - std::min(na, 1.0);
      const SkewParams candidate(std::min(na, cfg.target == Target::Thm31 ? 2.0 : 1.0), nb);
      if (params_in_region(cfg.target, cfg.region, candidate)) params = candidate;
    }
    const double rel = evaluate(cfg.target, rho, a, b, params, cfg.tol).relative_slack();
    if (rel < best) {
      best = rel;
      current = Draw{std::move(rho), std::move(a), std::move(b), params};
      ++accepted;
    }
  }
  return accepted;
}

}  // namespace

std::optional<TrialRecord> hunt(const HuntConfig& cfg) {
  if (cfg.max_trials < 1) throw DomainError("hunt: max trials must be >= 1");
  if (cfg.dim < 1) throw DomainError("hunt: dimension must be >= 1");
  const TrialConfig trial_cfg{cfg.target, {cfg.dim}, cfg.max_trials, cfg.seed,
                              cfg.region, cfg.eigen_floor, cfg.tol, 1};

  std::uint64_t best_index = 0;
  double best = kInf;
  bool found = false;
  for (std::uint64_t k = 0; k < cfg.max_trials && !found; ++k) {
    const TrialRecord r = evaluate_trial(trial_cfg, cfg.dim, k);
    const double rel = r.verdict.relative_slack();
    if (rel < best) {
      best = rel;
      best_index = k;
    }
    found = rel < -kWitnessTol;
  }
  // Refinement runs on the first witness (to sharpen it) or on the closest near-miss.
  if (!found && best >= cfg.refine_trigger) return std::nullopt;

  Draw current = draw(trial_cfg, cfg.dim, best_index);
  const std::size_t accepted = refine(cfg, best_index, current, best);
  if (best >= -kWitnessTol) return std::nullopt;
  if (accepted == 0) return evaluate_trial(trial_cfg, cfg.dim, best_index, true);

  TrialRecord record;
  record.target = cfg.target;
  record.seed = cfg.seed;
  record.trial_index = best_index;
  record.dim = cfg.dim;
  record.eigen_floor = cfg.eigen_floor;
  record.params = current.params;
  record.verdict = evaluate(cfg.target, current.rho, current.a, current.b, current.params, cfg.tol);
  record.witness = Witness{current.rho.matrix(), current.a.matrix(), current.b.matrix()};
  record.refined = true;
  return record;
}

std::vector<SweepRow> sweep(const SweepConfig& cfg) {
  if (cfg.alpha_grid.empty() || cfg.beta_grid.empty()) throw DomainError("sweep: empty grid");
  if (cfg.dims.empty()) throw DomainError("sweep: no dimensions given");
  if (cfg.trials_per_cell < 1) throw DomainError("sweep: trials per cell must be >= 1");
  for (double g : cfg.alpha_grid)
    if (!(g >= 0.0 && g <= 2.0)) throw DomainError("sweep: grid values must lie in [0, 2]");
  for (double g : cfg.beta_grid)
    if (!(g >= 0.0 && g <= 2.0)) throw DomainError("sweep: grid values must lie in [0, 2]");

  // Common random numbers: the same draws feed every cell.
  const TrialConfig base{Target::Heisenberg, cfg.dims, cfg.trials_per_cell, cfg.seed,
                         ParamRegion::Any, cfg.eigen_floor, cfg.tol, 1};
  std::vector<Draw> draws;
  draws.reserve(cfg.dims.size() * cfg.trials_per_cell);
  for (std::size_t d : cfg.dims)
    for (std::size_t t = 0; t < cfg.trials_per_cell; ++t) draws.push_back(draw(base, d, t));
  if (cfg.include_fixture) {
    draws.push_back(Draw{validate_density(ComplexMatrix::diagonal({0.75, 0.25}), cfg.eigen_floor),
                         pauli("x"), pauli("y"), std::nullopt});
  }

  const std::size_t nb = cfg.beta_grid.size();
  std::vector<SweepRow> rows(cfg.alpha_grid.size() * nb);
  parallel_for(rows.size(), cfg.threads, [&](std::size_t cell) {
    const SkewParams p(cfg.alpha_grid[cell / nb], cfg.beta_grid[cell % nb]);
    SweepRow row{p.alpha(), p.beta(), p.region(), draws.size(), kInf, 0.0, 0};
    double sum = 0.0;
    for (const Draw& d : draws) {
      const Verdict v = evaluate(Target::Thm31, d.rho, d.a, d.b, p, cfg.tol);
      row.min_slack = std::min(row.min_slack, v.slack);
      sum += v.slack;
      if (!v.holds) ++row.violations;
    }
    row.mean_slack = sum / static_cast<double>(draws.size());
    rows[cell] = row;
  });
  return rows;
}

// ---------------------------------------------------------------------------

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("log_grid: need 0 < lo <= hi");
  if (n == 1) return {lo};
  std::vector<double> out(n);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<ScalarSummary> run_scalar_suite(const ScalarSuiteConfig& cfg) {
  const std::vector<double> ts = log_grid(cfg.t_min, cfg.t_max, cfg.grid_points);
  const std::vector<double> ts_ge_one = log_grid(1.0, cfg.t_max, cfg.grid_points);

  auto tally = [](ScalarSummary& s, const Verdict& v) {
    ++s.evaluations;
    if (!v.holds) ++s.violations;
    s.extreme = std::min(s.extreme, v.relative_slack());
  };

  std::vector<ScalarSummary> out;

  ScalarSummary lemma{"scalar_lemma33", 0, 0, kInf};
  RandomStream lemma_stream(cfg.seed, {1});
  for (std::size_t k = 0; k < cfg.param_samples; ++k) {
    const SkewParams p = sample_params(ParamRegion::Asserted, lemma_stream);
    for (double t : ts) tally(lemma, scalar_lemma33(t, p.alpha(), p.beta()));
  }
  out.push_back(lemma);

  ScalarSummary factor{"scalar_factorization", 0, 0, 0.0};
  RandomStream factor_stream(cfg.seed, {2});
  for (std::size_t k = 0; k < cfg.param_samples; ++k) {
    const SkewParams p = sample_params(ParamRegion::Any, factor_stream);
    for (double t : ts) {
      const FactorizationCheck c = scalar_factorization(t, p.alpha(), p.beta());
      ++factor.evaluations;
      const double rel = c.residual / c.scale;
      if (rel > 1e-10) ++factor.violations;
      factor.extreme = std::max(factor.extreme, rel);
    }
  }
  out.push_back(factor);

  ScalarSummary f{"scalar_f", 0, 0, kInf};
  std::vector<double> ks;
  for (int i = 0; i <= 25; ++i) ks.push_back(0.5 * i / 25.0);
  for (int i = 0; i <= 25; ++i) ks.push_back(1.0 + 2.0 * i / 25.0);
  for (double k : ks)
    for (double t : ts_ge_one) tally(f, scalar_f(t, k).verdict);
  out.push_back(f);

  ScalarSummary prior{"scalar_prior", 0, 0, kInf};
  for (int i = 0; i <= 100; ++i)
    for (double s : ts_ge_one) tally(prior, scalar_prior(i / 100.0, s));
  out.push_back(prior);

  ScalarSummary weight{"weight_product", 0, 0, kInf};
  RandomStream weight_stream(cfg.seed, {3});
  for (std::size_t k = 0; k < cfg.weight_samples; ++k) {
    const SkewParams p = sample_params(ParamRegion::Asserted, weight_stream);
    // Eigenvalue pairs spread over several decades.
    const double li = std::pow(10.0, weight_stream.uniform(-6.0, 0.0));
    const double lj = std::pow(10.0, weight_stream.uniform(-6.0, 0.0));
    tally(weight, check_weight_product(li, lj, p));
  }
  out.push_back(weight);

  return out;
}

}  // namespace skewlab
