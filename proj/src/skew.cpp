#include "skewlab/skew.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skewlab/errors.hpp"

namespace skewlab {

namespace {

constexpr double kClampTol = 1e-12;

void require_dim(const DensityMatrix& rho, const Observable& h) {
  if (rho.dim() != h.dim()) {
    throw DimensionError("skew quantity: state has dim " + std::to_string(rho.dim()) +
                         ", observable has dim " + std::to_string(h.dim()));
  }
}

void require_floor(const DensityMatrix& rho, const SkewParams& p) {
  if (p.needs_invertible() && !rho.invertible()) {
    throw StateError("alpha + beta > 1 needs an invertible state validated with a positive eigen-floor");
  }
}

/// Tr[rho^a H0 rho^{1-a} H0].
double mixed_trace(const DensityMatrix& rho, const ComplexMatrix& h0, double a) {
  return trace_product({rho.power(a), h0, rho.power(1.0 - a), h0}).real();
}

struct TraceTerms {
  double plain = 0.0;  // Tr[rho H0^2]
  double sum = 0.0;    // exponent alpha + beta
  double alpha = 0.0;
  double beta = 0.0;

  double skew_i() const { return 0.5 * (plain + sum - alpha - beta); }
  double skew_j() const { return 0.5 * (plain + sum + alpha + beta); }
  double scale() const {
    return std::max({std::abs(plain), std::abs(sum), std::abs(alpha), std::abs(beta)});
  }
};

TraceTerms trace_terms(const DensityMatrix& rho, const Observable& h, const SkewParams& p) {
  require_dim(rho, h);
  require_floor(rho, p);
  const ComplexMatrix h0 = center(rho, h).matrix;
  TraceTerms t;
  t.plain = trace_product({rho.matrix(), h0, h0}).real();
  t.sum = mixed_trace(rho, h0, p.sum());
  t.alpha = mixed_trace(rho, h0, p.alpha());
  t.beta = p.beta() == p.alpha() ? t.alpha : mixed_trace(rho, h0, p.beta());
  return t;
}

enum class Sign { Minus, Plus };

/// f_weight without the positivity check; zero eigenvalues follow frac_power's conventions.
double pair_weight(double x, double y, double a) {
  return std::pow(x, a) * std::pow(y, 1.0 - a) + std::pow(x, 1.0 - a) * std::pow(y, a);
}

double clamped(double lambda) { return std::abs(lambda) <= kEigenZeroClamp ? 0.0 : lambda; }

double spectral_pair_sum(const DensityMatrix& rho, const Observable& h, const SkewParams& p,
                         Sign sign) {
  require_dim(rho, h);
  require_floor(rho, p);
  const ComplexMatrix h0 = rho.spectrum().to_eigenbasis(center(rho, h).matrix);
  const auto& lambda = rho.eigenvalues();
  const double s = sign == Sign::Plus ? 1.0 : -1.0;
  double total = 0.0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      const double element = std::norm(h0(i, j));
      if (element == 0.0) continue;
      const double li = clamped(lambda[i]);
      const double lj = clamped(lambda[j]);
      const double weight = li + lj + pair_weight(li, lj, p.sum()) +
                            s * (pair_weight(li, lj, p.alpha()) + pair_weight(li, lj, p.beta()));
      total += weight * element;
    }
  }
  return 0.5 * total;
}

}  // namespace

std::string_view to_string(Region region) noexcept {
  switch (region) {
    case Region::LeHalf:
      return "le_half";
    case Region::GeOne:
      return "ge_one";
    case Region::Gap:
      return "gap";
  }
  return "gap";
}

Region classify_region(double alpha, double beta) noexcept {
  const double k = alpha + beta;
  if (k <= 0.5) return Region::LeHalf;
  if (k >= 1.0) return Region::GeOne;
  return Region::Gap;
}

SkewParams::SkewParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha < 0.0 || beta < 0.0) {
    throw DomainError("SkewParams: alpha and beta must be finite and >= 0");
  }
  region_ = classify_region(alpha, beta);
}

SkewParams SkewParams::dyson(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("SkewParams::dyson: alpha outside [0, 1]");
  return {alpha, 1.0 - alpha};
}

double f_weight(double x, double y, double a) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("f_weight: arguments must be positive");
  return pair_weight(x, y, a);
}

double clamp_nonnegative(double value, double scale, std::string_view what) {
  if (value >= 0.0) return value;
  if (value >= -kClampTol * std::max(1.0, scale)) return 0.0;
  throw NumericalError(std::string(what) + " is negative beyond round-off: " + std::to_string(value));
}

double skew_I(const DensityMatrix& rho, const Observable& h, const SkewParams& p) {
  return trace_terms(rho, h, p).skew_i();
}

double skew_I_spectral(const DensityMatrix& rho, const Observable& h, const SkewParams& p) {
  return spectral_pair_sum(rho, h, p, Sign::Minus);
}

double skew_J(const DensityMatrix& rho, const Observable& h, const SkewParams& p) {
  return trace_terms(rho, h, p).skew_j();
}

double skew_J_spectral_bound(const DensityMatrix& rho, const Observable& h, const SkewParams& p) {
  return spectral_pair_sum(rho, h, p, Sign::Plus);
}

double u_luo(const DensityMatrix& rho, const Observable& h, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("u_luo: alpha outside [0, 1]");
  const double v = variance(rho, h);
  const double i = skew_I(rho, h, SkewParams::dyson(alpha));
  const double radicand = v * v - (v - i) * (v - i);
  return std::sqrt(clamp_nonnegative(radicand, v * v, "u_luo radicand"));
}

double u_geo(const DensityMatrix& rho, const Observable& h, const SkewParams& p) {
  const TraceTerms t = trace_terms(rho, h, p);
  const double i = clamp_nonnegative(t.skew_i(), t.scale(), "skew_I");
  const double j = clamp_nonnegative(t.skew_j(), t.scale(), "skew_J");
  return std::sqrt(i * j);
}

double dyson_I(const DensityMatrix& rho, const Observable& h, double alpha) {
  require_dim(rho, h);
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("dyson_I: alpha outside [0, 1]");
  const ComplexMatrix h0 = center(rho, h).matrix;
  return trace_product({rho.matrix(), h0, h0}).real() - mixed_trace(rho, h0, alpha);
}

double dyson_J(const DensityMatrix& rho, const Observable& h, double alpha) {
  require_dim(rho, h);
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("dyson_J: alpha outside [0, 1]");
  const ComplexMatrix h0 = center(rho, h).matrix;
  return trace_product({rho.matrix(), h0, h0}).real() + mixed_trace(rho, h0, alpha);
}

QuantityReport report(const DensityMatrix& rho, const Observable& h, const SkewParams& p) {
  const TraceTerms t = trace_terms(rho, h, p);
  QuantityReport r{.params = p};
  r.variance = variance(rho, h);
  r.skew_i = t.skew_i();
  r.skew_j = t.skew_j();
  r.skew_u = std::sqrt(clamp_nonnegative(r.skew_i, t.scale(), "skew_I") *
                       clamp_nonnegative(r.skew_j, t.scale(), "skew_J"));
  r.dual_path_delta = std::abs(r.skew_i - skew_I_spectral(rho, h, p));
  return r;
}

}  // namespace skewlab
