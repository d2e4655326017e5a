#pragma once

#include <string_view>

#include "skewlab/states.hpp"

namespace skewlab {

/// Where alpha + beta sits relative to the uncertainty relation's hypothesis.
enum class Region {
  LeHalf,  ///< alpha + beta <= 1/2
  GeOne,   ///< alpha + beta >= 1
  Gap,     ///< 1/2 < alpha + beta < 1, no claim is made here
};

std::string_view to_string(Region region) noexcept;
Region classify_region(double alpha, double beta) noexcept;

/// Exponent pair (alpha, beta), both >= 0, with its derived region label.
class SkewParams {
 public:
  /// Throws DomainError on negative or non-finite input.
  SkewParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double sum() const noexcept { return alpha_ + beta_; }
  Region region() const noexcept { return region_; }
  /// LeHalf or GeOne.
  bool asserted() const noexcept { return region_ != Region::Gap; }
  /// Negative powers of rho appear once alpha + beta > 1.
  bool needs_invertible() const noexcept { return sum() > 1.0; }

  /// The one-parameter case (alpha, 1 - alpha).
  static SkewParams dyson(double alpha);
  /// alpha = beta = 1/2.
  static SkewParams wigner_yanase() { return {0.5, 0.5}; }

  friend bool operator==(const SkewParams&, const SkewParams&) = default;

 private:
  double alpha_;
  double beta_;
  Region region_;
};

/// Bundle of the quantities for one (rho, H, params).
struct QuantityReport {
  double variance = 0.0;
  double skew_i = 0.0;
  double skew_j = 0.0;
  double skew_u = 0.0;
  /// |trace-path I - spectral-path I|
  double dual_path_delta = 0.0;
  SkewParams params{0.5, 0.5};
};

/// x^a y^{1-a} + x^{1-a} y^a for x, y > 0.
double f_weight(double x, double y, double a);

/// Generalized skew information via the four-trace expansion on H_0:
/// (Tr[rho H0^2] + Tr[rho^{a+b} H0 rho^{1-a-b} H0] - Tr[rho^a H0 rho^{1-a} H0] - Tr[rho^b H0 rho^{1-b} H0]) / 2.
double skew_I(const DensityMatrix& rho, const Observable& h, const SkewParams& p);

/// The same quantity as a pairwise sum over rho's eigenbasis,
/// 1/2 sum_{i<j} (l_i + l_j + f_{a+b} - f_a - f_b) |<i|H0|j>|^2.
double skew_I_spectral(const DensityMatrix& rho, const Observable& h, const SkewParams& p);

/// Anti-commutator counterpart: the four-trace expansion with all plus signs.
double skew_J(const DensityMatrix& rho, const Observable& h, const SkewParams& p);

/// Off-diagonal part of skew_J in the eigenbasis,
/// 1/2 sum_{i<j} (l_i + l_j + f_{a+b} + f_a + f_b) |<i|H0|j>|^2, a lower bound for skew_J.
double skew_J_spectral_bound(const DensityMatrix& rho, const Observable& h, const SkewParams& p);

/// sqrt(V^2 - (V - I_{rho,alpha})^2) with I_{rho,alpha} = skew_I(alpha, 1 - alpha); alpha in [0, 1].
double u_luo(const DensityMatrix& rho, const Observable& h, double alpha);

/// sqrt(skew_I * skew_J).
double u_geo(const DensityMatrix& rho, const Observable& h, const SkewParams& p);

/// Tr[rho H0^2] - Tr[rho^alpha H0 rho^{1-alpha} H0], evaluated directly.
double dyson_I(const DensityMatrix& rho, const Observable& h, double alpha);
/// Tr[rho H0^2] + Tr[rho^alpha H0 rho^{1-alpha} H0], evaluated directly.
double dyson_J(const DensityMatrix& rho, const Observable& h, double alpha);

QuantityReport report(const DensityMatrix& rho, const Observable& h, const SkewParams& p);

/// Quantities within -1e-12 * max(1, scale) of zero are round-off and clamp to 0;
/// anything more negative throws NumericalError.
double clamp_nonnegative(double value, double scale, std::string_view what);

}  // namespace skewlab
