#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewlab/skew.hpp"

namespace skewlab {

/// Default holds-tolerance: slack >= -kHoldsTol * max(1, |lhs|, |rhs|).
inline constexpr double kHoldsTol = 1e-9;
/// A hunted witness must beat this (relative) slack, stricter than kHoldsTol.
inline constexpr double kWitnessTol = 1e-6;

/// Outcome of one inequality "lhs >= rhs".
struct Verdict {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = true;
  double tol = kHoldsTol;
  /// False when the inequality is evaluated outside the region where it is claimed.
  bool asserted = true;

  double scale() const noexcept;
  /// slack / scale
  double relative_slack() const noexcept;
};

Verdict make_verdict(std::string name, double lhs, double rhs, double tol = kHoldsTol,
                     bool asserted = true);

/// |Tr[rho [A, B]]| from the commutator directly.
double commutator_expectation(const DensityMatrix& rho, const Observable& a, const Observable& b);
/// The same modulus as 2 |sum_{i<j} (l_i - l_j) Im <i|A0|j><j|B0|i>| in rho's eigenbasis.
double commutator_expectation_spectral(const DensityMatrix& rho, const Observable& a,
                                       const Observable& b);

/// V(A) V(B) >= |Tr[rho[A,B]]|^2 / 4.
Verdict check_heisenberg(const DensityMatrix& rho, const Observable& a, const Observable& b);
/// V(A) V(B) - (Re Cov(A,B))^2 >= |Tr[rho[A,B]]|^2 / 4, with the symmetrized covariance.
Verdict check_schrodinger(const DensityMatrix& rho, const Observable& a, const Observable& b);
/// U(A) U(B) >= |Tr[rho[A,B]]|^2 / 4 with Luo's U at alpha = 1/2.
Verdict check_luo(const DensityMatrix& rho, const Observable& a, const Observable& b);
/// U_alpha(A) U_alpha(B) >= alpha (1 - alpha) |Tr[rho[A,B]]|^2.
Verdict check_thm21(const DensityMatrix& rho, const Observable& a, const Observable& b,
                    double alpha);
/// U_{a,b}(A) U_{a,b}(B) >= alpha beta |Tr[rho[A,B]]|^2; asserted only outside the gap region.
Verdict check_thm31(const DensityMatrix& rho, const Observable& a, const Observable& b,
                    const SkewParams& p);
/// The naive Wigner-Yanase candidate I(A) I(B) >= |Tr[rho[A,B]]|^2 / 4, which is false in general.
Verdict check_wy_naive(const DensityMatrix& rho, const Observable& a, const Observable& b);

/// Ordering chains among I, J, U, V for one observable plus the trace comparison
/// Tr[rho^{1/2} H rho^{1/2} H] <= Tr[rho^alpha H rho^{1-alpha} H]. One verdict per link.
std::vector<Verdict> check_chain(const DensityMatrix& rho, const Observable& h, double alpha);

/// Pairwise weight inequality
/// (l_i + l_j + f_{a+b})^2 - (f_a + f_b)^2 >= 16 a b (l_i - l_j)^2.
Verdict check_weight_product(double lambda_i, double lambda_j, const SkewParams& p,
                             double tol = 1e-12);

/// (t^{1-a-b} + 1)^2 (t^{2a} - 1)(t^{2b} - 1) >= 16 a b (t - 1)^2 for t > 0.
Verdict scalar_lemma33(double t, double alpha, double beta);

struct FactorizationCheck {
  double product = 0.0;     ///< (t^{1-a-b} + 1)^2 (t^{2a} - 1)(t^{2b} - 1)
  double difference = 0.0;  ///< (t + 1 + t^{a+b} + t^{1-a-b})^2 - (t^a + t^{1-a} + t^b + t^{1-b})^2
  double residual = 0.0;
  double scale = 1.0;       ///< max(1, |product|, |difference|)
};
FactorizationCheck scalar_factorization(double t, double alpha, double beta);

struct ScalarFCheck {
  double value = 0.0;  ///< (t^{1-k} + 1)(t^k - 1) - 2k(t - 1)
  Verdict verdict;
};
/// t >= 1, k >= 0; asserted when k >= 1 or k <= 1/2.
ScalarFCheck scalar_f(double t, double k);

/// (1 - 2p)^2 (s - 1)^2 >= (s^p - s^{1-p})^2 for p in [0, 1], s >= 1.
Verdict scalar_prior(double p, double s);

// ---------------------------------------------------------------------------
// Randomized trials

enum class Target { Heisenberg, Schrodinger, Luo, Thm21, Thm31, WyNaive, Chain };

/// Accepts the CLI tokens: heisenberg, schrodinger, luo, thm21, thm31, wy-naive, chain.
Target parse_target(std::string_view name);
std::string_view to_string(Target target) noexcept;
/// Targets whose verdict is a claimed truth (everything except wy-naive).
bool target_asserted(Target target) noexcept;

/// Where (alpha, beta) is drawn from for the two-parameter target.
enum class ParamRegion { Asserted, Gap, Any };
ParamRegion parse_param_region(std::string_view name);
std::string_view to_string(ParamRegion region) noexcept;

/// Asserted: probability 1/2 uniform on the triangle a + b <= 1/2, else uniform on
/// {[0,2]^2 : a + b >= 1}. Gap: uniform on 1/2 < a + b < 1. Any: uniform on [0,2]^2.
SkewParams sample_params(ParamRegion region, RandomStream& stream);

struct Witness {
  ComplexMatrix rho;
  ComplexMatrix a;
  ComplexMatrix b;
};

struct TrialRecord {
  Target target = Target::Thm31;
  std::uint64_t seed = 0;
  std::uint64_t trial_index = 0;
  std::size_t dim = 0;
  double eigen_floor = 0.0;
  std::optional<SkewParams> params;
  Verdict verdict;
  std::optional<Witness> witness;
  /// Produced by local refinement rather than a plain draw.
  bool refined = false;
};

struct TrialConfig {
  Target target = Target::Thm31;
  std::vector<std::size_t> dims{2};
  std::size_t trials_per_dim = 1000;
  std::uint64_t seed = 0;
  ParamRegion region = ParamRegion::Asserted;
  double eigen_floor = 1e-6;
  double tol = kHoldsTol;
  unsigned threads = 1;
};

/// Draws (rho, A, B, params) for (seed, dim, index) and evaluates the target.
/// For the chain target the verdict is the link with the smallest relative slack.
TrialRecord evaluate_trial(const TrialConfig& cfg, std::size_t dim, std::uint64_t index,
                           bool keep_witness = false);

/// Re-evaluates a record from its witness payload.
Verdict replay(const TrialRecord& record);

struct TrialAggregate {
  Target target = Target::Thm31;
  ParamRegion region = ParamRegion::Asserted;
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims;
  std::size_t trials = 0;
  std::size_t violations = 0;
  double min_slack = 0.0;
  double min_relative_slack = 0.0;
  /// Trial with the smallest relative slack, witness attached.
  std::optional<TrialRecord> worst;
};

/// Schedule-independent: trials may run on several threads but are aggregated in index order.
TrialAggregate run_trials(const TrialConfig& cfg);

struct HuntConfig {
  Target target = Target::WyNaive;
  std::size_t dim = 2;
  std::size_t max_trials = 100000;
  std::uint64_t seed = 0;
  ParamRegion region = ParamRegion::Asserted;
  double eigen_floor = 1e-6;
  double tol = kHoldsTol;
  /// Refine the best near-miss when its relative slack is below this.
  double refine_trigger = 1e-3;
  std::size_t refine_steps = 100;
};

/// First record with slack < -kWitnessTol * scale, sharpened by local refinement; a near-miss
/// within refine_trigger is refined too. None when nothing crosses the threshold.
std::optional<TrialRecord> hunt(const HuntConfig& cfg);

struct SweepConfig {
  std::vector<double> alpha_grid;
  std::vector<double> beta_grid;
  std::vector<std::size_t> dims{2};
  std::size_t trials_per_cell = 100;
  std::uint64_t seed = 0;
  double eigen_floor = 1e-6;
  /// Add the qubit fixture (diag(3/4, 1/4), sigma_x, sigma_y) to every cell.
  bool include_fixture = false;
  double tol = kHoldsTol;
  unsigned threads = 1;
};

struct SweepRow {
  double alpha = 0.0;
  double beta = 0.0;
  Region region = Region::LeHalf;
  std::size_t trials = 0;
  double min_slack = 0.0;
  double mean_slack = 0.0;
  std::size_t violations = 0;
};

/// One row per (alpha, beta) cell in alpha-major order. Every cell sees the same
/// sampled (rho, A, B) triples.
std::vector<SweepRow> sweep(const SweepConfig& cfg);

// ---------------------------------------------------------------------------
// Scalar grids

struct ScalarSummary {
  std::string name;
  std::size_t evaluations = 0;
  std::size_t violations = 0;
  /// min relative slack for inequalities, max residual / scale for identities.
  double extreme = 0.0;
};

struct ScalarSuiteConfig {
  std::size_t grid_points = 200;    ///< log-spaced t values
  double t_min = 1e-3;
  double t_max = 1e3;
  std::size_t param_samples = 400;  ///< (alpha, beta) draws per check
  std::size_t weight_samples = 10000;
  std::uint64_t seed = 0;
};

std::vector<ScalarSummary> run_scalar_suite(const ScalarSuiteConfig& cfg);

/// Log-spaced grid of n points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

}  // namespace skewlab
