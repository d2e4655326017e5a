#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "skewlab/errors.hpp"
#include "skewlab/inequality.hpp"

using namespace skewlab;

namespace {

const double kSqrt3 = std::sqrt(3.0);

DensityMatrix qubit() { return validate_density(ComplexMatrix::diagonal({0.75, 0.25}), 1e-8); }
DensityMatrix half() { return validate_density(ComplexMatrix::identity(2) * 0.5, 1e-8); }

const Verdict& find(const std::vector<Verdict>& links, std::string_view name) {
  const auto it = std::find_if(links.begin(), links.end(), [&](const Verdict& v) { return v.name == name; });
  REQUIRE(it != links.end());
  return *it;
}

void check_verdict_rule(const Verdict& v) {
  CHECK(v.slack == v.lhs - v.rhs);
  CHECK(v.holds == (v.slack >= -v.tol * std::max({1.0, std::abs(v.lhs), std::abs(v.rhs)})));
}

}  // namespace

TEST_CASE("verdict tolerance rule on synthetic sides") {
  CHECK(make_verdict("t", 1.0, 1.0).holds);
  CHECK(make_verdict("t", 1.0, 1.0 + 0.9e-9).holds);
  CHECK_FALSE(make_verdict("t", 1.0, 1.0 + 1.1e-9).holds);
  // Scale grows with the larger side.
  CHECK(make_verdict("t", 1000.0, 1000.0 + 0.9e-6).holds);
  CHECK_FALSE(make_verdict("t", 1000.0, 1000.0 + 1.1e-6).holds);
  CHECK(make_verdict("t", 0.0, 0.9e-9).holds);
  const Verdict v = make_verdict("t", 2.0, 5.0, 1e-3, false);
  CHECK(v.slack == -3.0);
  CHECK(v.scale() == 5.0);
  CHECK(v.relative_slack() == doctest::Approx(-0.6));
  CHECK_FALSE(v.asserted);
}

TEST_CASE("commutator expectation paths agree") {
  CHECK(commutator_expectation(qubit(), pauli("x"), pauli("y")) == doctest::Approx(1.0));
  RandomStream stream(12);
  for (int k = 0; k < 200; ++k) {
    const SamplerConfig cfg{2 + static_cast<std::size_t>(k % 5), 12, 1e-6};
    const DensityMatrix rho = sample_density(cfg, stream);
    const Observable a = sample_observable(cfg, stream);
    const Observable b = sample_observable(cfg, stream);
    const double direct = commutator_expectation(rho, a, b);
    CHECK(std::abs(direct - commutator_expectation_spectral(rho, a, b)) <= 1e-10 * std::max(1.0, direct));
  }
}

TEST_CASE("heisenberg examples") {
  const Verdict v = check_heisenberg(qubit(), pauli("x"), pauli("y"));
  CHECK(v.lhs == doctest::Approx(1.0));
  CHECK(v.rhs == doctest::Approx(0.25));
  CHECK(v.holds);
  CHECK(check_heisenberg(half(), pauli("x"), pauli("y")).rhs == doctest::Approx(0.0));
  const Verdict self = check_heisenberg(qubit(), pauli("z"), pauli("z"));
  CHECK(self.rhs == 0.0);
  CHECK(self.holds);
}

TEST_CASE("schrodinger examples (symmetrized covariance)") {
  // Re Cov(sigma_x, sigma_y) = 0 for the diagonal qubit, so lhs is V V = 1.
  const Verdict v = check_schrodinger(qubit(), pauli("x"), pauli("y"));
  CHECK(v.lhs == doctest::Approx(1.0));
  CHECK(v.rhs == doctest::Approx(0.25));
  CHECK(v.holds);
  const Verdict self = check_schrodinger(qubit(), pauli("x"), pauli("x"));
  CHECK(self.lhs >= -1e-12);
  CHECK(self.rhs == 0.0);
  CHECK(self.holds);
  CHECK(check_schrodinger(half(), pauli("x"), pauli("z")).rhs == doctest::Approx(0.0));
  // The case that breaks the complex-modulus form holds here.
  CHECK(check_schrodinger(validate_density(ComplexMatrix::diagonal({0.9, 0.1})), pauli("x"), pauli("y")).holds);
}

TEST_CASE("luo examples") {
  const Verdict v = check_luo(qubit(), pauli("x"), pauli("y"));
  CHECK(std::abs(v.lhs - 0.25) <= 1e-10);
  CHECK(std::abs(v.rhs - 0.25) <= 1e-10);
  CHECK(v.holds);
  const Verdict mixed = check_luo(half(), pauli("x"), pauli("y"));
  CHECK(mixed.lhs == 0.0);
  CHECK(mixed.rhs == doctest::Approx(0.0));
  CHECK(mixed.holds);

  // |0><0| epsilon-mixed up to the floor.
  const DensityMatrix eps_pure = validate_density(ComplexMatrix::diagonal({1.0 - 1e-6, 1e-6}), 1e-6);
  CHECK(check_luo(eps_pure, pauli("x"), pauli("y")).holds);
}

TEST_CASE("thm21 examples") {
  const Verdict v = check_thm21(qubit(), pauli("x"), pauli("y"), 0.25);
  CHECK(v.lhs == doctest::Approx(0.1919873).epsilon(1e-7));
  CHECK(v.lhs == doctest::Approx(1.0 - (2.0 * kSqrt3 + 3.0) / 8.0).epsilon(1e-12));
  CHECK(v.rhs == doctest::Approx(0.1875));
  CHECK(v.holds);
  CHECK(check_thm21(qubit(), pauli("x"), pauli("y"), 0.0).rhs == 0.0);
  const Verdict at_half = check_thm21(qubit(), pauli("x"), pauli("y"), 0.5);
  const Verdict luo = check_luo(qubit(), pauli("x"), pauli("y"));
  CHECK(at_half.lhs == doctest::Approx(luo.lhs).epsilon(1e-12));
  CHECK(at_half.rhs == doctest::Approx(luo.rhs).epsilon(1e-12));
}

TEST_CASE("thm31 examples") {
  const Verdict eq = check_thm31(qubit(), pauli("x"), pauli("y"), {0.25, 0.25});
  CHECK(std::abs(eq.lhs - 0.0625) <= 1e-9);
  CHECK(std::abs(eq.rhs - 0.0625) <= 1e-9);
  CHECK(eq.holds);
  CHECK(eq.asserted);

  const Verdict one = check_thm31(qubit(), pauli("x"), pauli("y"), {1.0, 1.0});
  CHECK(one.lhs == doctest::Approx(16.0 / 9.0));
  CHECK(one.rhs == doctest::Approx(1.0));
  CHECK(one.holds);

  CHECK(check_thm31(qubit(), pauli("x"), pauli("y"), {0.0, 1.7}).rhs == 0.0);
  CHECK_FALSE(check_thm31(qubit(), pauli("x"), pauli("y"), {0.3, 0.4}).asserted);
}

TEST_CASE("thm31 fails in the gap region for the qubit fixture") {
  // Not a claimed inequality there; this pins down that the gap is genuinely open.
  const Verdict v = check_thm31(qubit(), pauli("x"), pauli("y"), {0.375, 0.375});
  CHECK_FALSE(v.asserted);
  CHECK(v.slack < 0.0);
}

TEST_CASE("wy_naive examples") {
  const Verdict v = check_wy_naive(qubit(), pauli("x"), pauli("y"));
  const double i = 1.0 - kSqrt3 / 2.0;
  CHECK(v.lhs == doctest::Approx(i * i).epsilon(1e-12));
  CHECK(v.lhs == doctest::Approx(0.0179492).epsilon(1e-6));
  CHECK(v.rhs == doctest::Approx(0.25));
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.asserted);
  CHECK(v.slack == doctest::Approx(-0.232).epsilon(1e-3));
  CHECK(check_wy_naive(half(), pauli("x"), pauli("y")).holds);
  CHECK(check_wy_naive(qubit(), pauli("x"), pauli("x")).rhs == 0.0);
}

TEST_CASE("chain examples") {
  const std::vector<Verdict> links = check_chain(qubit(), pauli("x"), 0.25);
  CHECK(links.size() == 10);
  for (const Verdict& v : links) {
    CHECK(v.holds);
    check_verdict_rule(v);
  }
  const double f14 = (std::pow(3.0, 0.25) + std::pow(3.0, 0.75)) / 4.0;
  CHECK(find(links, "wyd_le_wy").rhs == doctest::Approx(1.0 - f14).epsilon(1e-12));
  CHECK(find(links, "wyd_le_wy").rhs == doctest::Approx(0.1011054).epsilon(1e-6));
  CHECK(find(links, "wyd_le_wy").lhs == doctest::Approx(0.1339746).epsilon(1e-6));
  CHECK(find(links, "wy_le_wy_dual").lhs == doctest::Approx(1.8660254).epsilon(1e-7));
  CHECK(find(links, "wy_dual_le_wyd_dual").lhs == doctest::Approx(1.0 + f14).epsilon(1e-12));

  for (const Verdict& v : check_chain(half(), pauli("x"), 0.3)) CHECK(v.holds);
  CHECK(std::abs(find(check_chain(half(), pauli("x"), 0.3), "wy_nonneg").lhs) < 1e-15);

  for (const Verdict& v : check_chain(qubit(), pauli("x"), 0.5)) {
    if (v.name == "wyd_le_wy" || v.name == "wy_dual_le_wyd_dual" || v.name == "luo_wyd_le_luo" ||
        v.name == "trace_power_ordering") {
      CHECK(std::abs(v.slack) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(check_chain(qubit(), pauli("x"), 1.2), DomainError);
}

TEST_CASE("checkers follow the verdict rule on random inputs") {
  RandomStream stream(21);
  for (int k = 0; k < 300; ++k) {
    const SamplerConfig cfg{2 + static_cast<std::size_t>(k % 4), 21, 1e-6};
    const DensityMatrix rho = sample_density(cfg, stream);
    const Observable a = sample_observable(cfg, stream);
    const Observable b = sample_observable(cfg, stream);
    const SkewParams p = sample_params(ParamRegion::Any, stream);
    check_verdict_rule(check_heisenberg(rho, a, b));
    check_verdict_rule(check_schrodinger(rho, a, b));
    check_verdict_rule(check_luo(rho, a, b));
    check_verdict_rule(check_thm21(rho, a, b, std::min(p.alpha(), 1.0)));
    check_verdict_rule(check_thm31(rho, a, b, p));
    check_verdict_rule(check_wy_naive(rho, a, b));
  }
}

TEST_CASE("scalar_lemma33 examples") {
  const Verdict eq = scalar_lemma33(4.0, 0.5, 0.5);
  CHECK(eq.lhs == doctest::Approx(36.0));
  CHECK(eq.rhs == doctest::Approx(36.0));
  CHECK(eq.holds);
  const Verdict one = scalar_lemma33(1.0, 0.3, 1.4);
  CHECK(one.lhs == 0.0);
  CHECK(one.rhs == 0.0);
  const Verdict v = scalar_lemma33(4.0, 1.0, 1.0);
  CHECK(v.lhs == doctest::Approx(351.5625));
  CHECK(v.rhs == doctest::Approx(144.0));
  CHECK(v.holds);
  CHECK_THROWS_AS(scalar_lemma33(0.0, 0.5, 0.5), DomainError);
}

TEST_CASE("scalar_factorization examples") {
  const FactorizationCheck one = scalar_factorization(1.0, 0.3, 0.9);
  CHECK(one.product == 0.0);
  CHECK(std::abs(one.difference) < 1e-14);
  CHECK(one.residual < 1e-14);
  const FactorizationCheck four = scalar_factorization(4.0, 0.5, 0.5);
  CHECK(four.product == doctest::Approx(36.0));
  CHECK(four.difference == doctest::Approx(36.0));
  CHECK(scalar_factorization(2.0, 0.2, 0.9).residual <= 1e-10 * scalar_factorization(2.0, 0.2, 0.9).scale);
}

TEST_CASE("scalar_f examples") {
  CHECK(scalar_f(1.0, 0.7).value == 0.0);
  CHECK(scalar_f(4.0, 2.0).value == doctest::Approx(6.75));
  CHECK(std::abs(scalar_f(4.0, 0.5).value) < 1e-14);
  CHECK(scalar_f(4.0, 2.0).verdict.asserted);
  CHECK_FALSE(scalar_f(4.0, 0.75).verdict.asserted);
  CHECK_THROWS_AS(scalar_f(0.5, 1.0), DomainError);
}

TEST_CASE("scalar_prior examples") {
  const Verdict mid = scalar_prior(0.5, 7.0);
  CHECK(mid.lhs == 0.0);
  CHECK(mid.rhs == 0.0);
  const Verdict zero = scalar_prior(0.0, 4.0);
  CHECK(zero.lhs == doctest::Approx(9.0));
  CHECK(zero.rhs == doctest::Approx(9.0));
  CHECK(zero.holds);
  const Verdict q = scalar_prior(0.25, 4.0);
  CHECK(q.lhs == doctest::Approx(2.25));
  CHECK(q.rhs == doctest::Approx(2.0));
  CHECK(q.holds);
  CHECK_THROWS_AS(scalar_prior(1.5, 4.0), DomainError);
}

TEST_CASE("weight product inequality") {
  CHECK(check_weight_product(0.75, 0.25, {0.25, 0.25}).holds);
  CHECK(check_weight_product(0.3, 0.3, {1.0, 0.7}).slack >= 0.0);
  CHECK_FALSE(check_weight_product(0.75, 0.25, {0.3, 0.4}).asserted);
}

TEST_CASE("target and region parsing") {
  CHECK(parse_target("wy-naive") == Target::WyNaive);
  CHECK(parse_target("wy_naive") == Target::WyNaive);
  CHECK(to_string(Target::Thm21) == "thm21");
  CHECK_FALSE(target_asserted(Target::WyNaive));
  CHECK(target_asserted(Target::Chain));
  CHECK_THROWS_AS(parse_target("thm99"), DomainError);
  CHECK(parse_param_region("gap") == ParamRegion::Gap);
  CHECK_THROWS_AS(parse_param_region("nowhere"), DomainError);
}

TEST_CASE("sample_params respects the requested region") {
  RandomStream stream(4);
  for (int k = 0; k < 2000; ++k) {
    const SkewParams a = sample_params(ParamRegion::Asserted, stream);
    CHECK(a.asserted());
    const SkewParams g = sample_params(ParamRegion::Gap, stream);
    CHECK(g.region() == Region::Gap);
    const SkewParams any = sample_params(ParamRegion::Any, stream);
    CHECK(any.alpha() <= 2.0);
    CHECK(any.beta() <= 2.0);
  }
}

TEST_CASE("run_trials: thm31 holds in asserted regions, dims 2-4") {
  TrialConfig cfg;
  cfg.target = Target::Thm31;
  cfg.dims = {2, 3, 4};
  cfg.trials_per_dim = 1000;
  cfg.seed = 7;
  const TrialAggregate agg = run_trials(cfg);
  CHECK(agg.trials == 3000);
  CHECK(agg.violations == 0);
  REQUIRE(agg.worst.has_value());
  CHECK(agg.worst->witness.has_value());
  CHECK(agg.worst->verdict.relative_slack() == agg.min_relative_slack);
}

TEST_CASE("run_trials: the naive relation is violated") {
  TrialConfig cfg;
  cfg.target = Target::WyNaive;
  cfg.dims = {2};
  cfg.trials_per_dim = 10000;
  cfg.seed = 7;
  const TrialAggregate agg = run_trials(cfg);
  CHECK(agg.violations >= 1);
  REQUIRE(agg.worst.has_value());
  CHECK_FALSE(agg.worst->verdict.holds);
}

TEST_CASE("run_trials is deterministic and thread-count independent") {
  TrialConfig cfg;
  cfg.target = Target::Chain;
  cfg.dims = {2, 5};
  cfg.trials_per_dim = 300;
  cfg.seed = 99;
  const TrialAggregate a = run_trials(cfg);
  cfg.threads = 4;
  const TrialAggregate b = run_trials(cfg);
  CHECK(a.violations == b.violations);
  CHECK(a.min_slack == b.min_slack);
  CHECK(a.min_relative_slack == b.min_relative_slack);
  REQUIRE(a.worst.has_value());
  REQUIRE(b.worst.has_value());
  CHECK(a.worst->trial_index == b.worst->trial_index);
  CHECK(a.worst->witness->rho == b.worst->witness->rho);
}

TEST_CASE("evaluate_trial regenerates identical verdicts") {
  TrialConfig cfg;
  cfg.target = Target::Thm21;
  cfg.seed = 3;
  const TrialRecord r1 = evaluate_trial(cfg, 3, 41);
  const TrialRecord r2 = evaluate_trial(cfg, 3, 41, true);
  CHECK(r1.verdict.lhs == r2.verdict.lhs);
  CHECK(r1.verdict.rhs == r2.verdict.rhs);
  REQUIRE(r2.witness.has_value());
  const Verdict again = replay(r2);
  CHECK(again.lhs == r2.verdict.lhs);
  CHECK(again.rhs == r2.verdict.rhs);
}

TEST_CASE("hunt examples") {
  SUBCASE("naive relation: sharp witness that replays") {
    HuntConfig cfg;
    cfg.target = Target::WyNaive;
    cfg.dim = 2;
    cfg.max_trials = 10000;
    cfg.seed = 1;
    const std::optional<TrialRecord> w = hunt(cfg);
    REQUIRE(w.has_value());
    CHECK(w->verdict.slack <= -0.1);
    REQUIRE(w->witness.has_value());
    const Verdict again = replay(*w);
    CHECK(std::abs(again.slack - w->verdict.slack) <= 1e-12);
  }
  SUBCASE("thm31 in asserted regions: nothing found") {
    HuntConfig cfg;
    cfg.target = Target::Thm31;
    cfg.dim = 2;
    cfg.max_trials = 10000;
    cfg.seed = 1;
    CHECK_FALSE(hunt(cfg).has_value());
  }
  SUBCASE("heisenberg: nothing found") {
    HuntConfig cfg;
    cfg.target = Target::Heisenberg;
    cfg.dim = 3;
    cfg.max_trials = 1000;
    cfg.seed = 5;
    CHECK_FALSE(hunt(cfg).has_value());
  }
  SUBCASE("thm31 in the gap region: a witness exists") {
    HuntConfig cfg;
    cfg.target = Target::Thm31;
    cfg.region = ParamRegion::Gap;
    cfg.dim = 2;
    cfg.max_trials = 10000;
    cfg.seed = 1;
    const std::optional<TrialRecord> w = hunt(cfg);
    REQUIRE(w.has_value());
    CHECK(w->params->region() == Region::Gap);
    CHECK(std::abs(replay(*w).slack - w->verdict.slack) <= 1e-12);
  }
}

TEST_CASE("sweep examples") {
  SweepConfig cfg;
  cfg.alpha_grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  cfg.beta_grid = cfg.alpha_grid;
  cfg.trials_per_cell = 50;
  cfg.seed = 1;
  cfg.include_fixture = true;
  const std::vector<SweepRow> rows = sweep(cfg);
  CHECK(rows.size() == 25);
  for (const SweepRow& r : rows) {
    CHECK(r.trials == 51);
    if (r.alpha * r.beta == 0.0) CHECK(r.min_slack >= 0.0);
    if (r.alpha == 0.25 && r.beta == 0.25) CHECK(std::abs(r.min_slack) <= 1e-9);
    if (classify_region(r.alpha, r.beta) != Region::Gap) CHECK(r.violations == 0);
  }
  CHECK(rows[1].alpha == 0.0);
  CHECK(rows[1].beta == 0.25);

  cfg.threads = 3;
  const std::vector<SweepRow> again = sweep(cfg);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].min_slack == again[k].min_slack);
    CHECK(rows[k].mean_slack == again[k].mean_slack);
  }
  cfg.alpha_grid = {2.5};
  CHECK_THROWS_AS(sweep(cfg), DomainError);
}

TEST_CASE("scalar suite finds no violations") {
  ScalarSuiteConfig cfg;
  cfg.grid_points = 50;
  cfg.param_samples = 50;
  cfg.weight_samples = 1000;
  for (const ScalarSummary& s : run_scalar_suite(cfg)) {
    INFO(s.name);
    CHECK(s.evaluations > 0);
    CHECK(s.violations == 0);
  }
}

TEST_CASE("log_grid") {
  const std::vector<double> g = log_grid(1e-3, 1e3, 7);
  REQUIRE(g.size() == 7);
  CHECK(g.front() == doctest::Approx(1e-3));
  CHECK(g[3] == doctest::Approx(1.0));
  CHECK(g.back() == doctest::Approx(1e3));
}
