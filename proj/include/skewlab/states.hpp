#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

#include "skewlab/hermitian.hpp"

namespace skewlab {

/// Tolerance below the requested eigen-floor that validation still accepts;
/// the epsilon-mixing repair lands exactly on the floor and round-off may dip under it.
inline constexpr double kFloorSlack = 1e-13;
/// Default eigen-floor for states that must be invertible.
inline constexpr double kDefaultEigenFloor = 1e-8;

/// Validated density operator with its cached spectrum.
class DensityMatrix {
 public:
  std::size_t dim() const noexcept { return matrix_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }
  const std::vector<double>& eigenvalues() const noexcept { return spectrum_.eigenvalues; }
  double eigen_floor() const noexcept { return floor_; }
  double min_eigenvalue() const noexcept { return spectrum_.eigenvalues.front(); }
  /// True when validated against a positive eigen-floor, so negative powers are allowed.
  bool invertible() const noexcept { return floor_ > 0.0; }

  /// rho^a from the cached spectrum.
  ComplexMatrix power(double exponent) const;

 private:
  friend DensityMatrix validate_density(const ComplexMatrix&, double, const JacobiOptions&);
  DensityMatrix(ComplexMatrix m, SpectralDecomposition s, double floor)
      : matrix_(std::move(m)), spectrum_(std::move(s)), floor_(floor) {}

  ComplexMatrix matrix_;
  SpectralDecomposition spectrum_;
  double floor_ = 0.0;
};

/// Hermitian matrix standing for an observable.
class Observable {
 public:
  /// Throws NotHermitianError unless Hermitian to 1e-10 (relative to max(1, ||M||_F)).
  explicit Observable(ComplexMatrix m);

  std::size_t dim() const noexcept { return matrix_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// H_0 = H - Tr[rho H] I together with the subtracted mean.
struct CenteredObservable {
  ComplexMatrix matrix;
  double mean = 0.0;
};

struct SamplerConfig {
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  double eigen_floor = kDefaultEigenFloor;

  /// Throws DomainError unless dim >= 1 and 0 <= eigen_floor < 1/dim.
  void validate() const;
};

/// Counter-based random stream: the engine state is a pure function of a seed
/// and a path of counters (dimension, trial index, ...), so trial outcomes do
/// not depend on evaluation order.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::initializer_list<std::uint64_t> path = {});

  double uniform(double lo = 0.0, double hi = 1.0);
  double normal();
  /// Standard complex Gaussian, E|z|^2 = 1.
  complex_t complex_normal();
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Validates and caches the spectrum. `eigen_floor` > 0 additionally demands
/// invertibility: min eigenvalue >= eigen_floor.
DensityMatrix validate_density(const ComplexMatrix& m, double eigen_floor = 0.0,
                               const JacobiOptions& jacobi = {});

CenteredObservable center(const DensityMatrix& rho, const Observable& h);

/// Tr[rho H^2] - Tr[rho H]^2.
double variance(const DensityMatrix& rho, const Observable& h);

/// Tr[rho A_0 B_0].
complex_t covariance(const DensityMatrix& rho, const Observable& a, const Observable& b);

/// Hilbert-Schmidt draw G G^dagger / Tr[G G^dagger], epsilon-mixed with I/dim if its
/// smallest eigenvalue falls below the configured floor.
DensityMatrix sample_density(const SamplerConfig& cfg, RandomStream& stream);

/// GUE-style draw (G + G^dagger) / 2.
Observable sample_observable(const SamplerConfig& cfg, RandomStream& stream);

/// Pauli matrices "x", "y", "z" and the 2x2 identity "id".
Observable pauli(std::string_view name);

}  // namespace skewlab
