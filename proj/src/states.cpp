#include "skewlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skewlab/errors.hpp"

namespace skewlab {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kNegativeEigenTol = 1e-10;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const complex_t z = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(i, j) = z;
      out(j, i) = std::conj(z);
    }
  }
  return out;
}

void require_dim(const DensityMatrix& rho, const ComplexMatrix& m, const char* op) {
  if (rho.dim() != m.dim()) {
    throw DimensionError(std::string(op) + ": state has dim " + std::to_string(rho.dim()) +
                         ", observable has dim " + std::to_string(m.dim()));
  }
}

ComplexMatrix ginibre(std::size_t n, RandomStream& stream) {
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = stream.complex_normal();
  return g;
}

}  // namespace

ComplexMatrix DensityMatrix::power(double exponent) const {
  return frac_power(spectrum_, exponent, floor_);
}

Observable::Observable(ComplexMatrix m) : matrix_(std::move(m)) {
  if (matrix_.empty()) throw DimensionError("Observable: empty matrix");
  if (!matrix_.all_finite()) throw DomainError("Observable: non-finite entry");
  if (!is_hermitian(matrix_, kHermitianTol)) {
    throw NotHermitianError("Observable: matrix is not Hermitian");
  }
}

void SamplerConfig::validate() const {
  if (dim < 1) throw DomainError("SamplerConfig: dim must be >= 1");
  if (!(eigen_floor >= 0.0) || eigen_floor * static_cast<double>(dim) >= 1.0) {
    throw DomainError("SamplerConfig: eigen_floor must lie in [0, 1/dim)");
  }
}

RandomStream::RandomStream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t key = splitmix64(seed);
  for (std::uint64_t counter : path) key = splitmix64(key ^ splitmix64(counter + 0x632be59bd9b4e019ULL));
  engine_.seed(key);
}

double RandomStream::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double RandomStream::normal() { return normal_(engine_); }

complex_t RandomStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

DensityMatrix validate_density(const ComplexMatrix& m, double eigen_floor,
                               const JacobiOptions& jacobi) {
  if (m.empty()) throw DimensionError("validate_density: empty matrix");
  if (!m.all_finite()) throw DomainError("validate_density: non-finite entry");
  if (!(eigen_floor >= 0.0)) throw DomainError("validate_density: eigen-floor must be >= 0");
  if (!is_hermitian(m, kHermitianTol)) {
    throw NotHermitianError("validate_density: matrix is not Hermitian");
  }
  const complex_t tr = m.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTol) {
    throw StateError("validate_density: trace " + std::to_string(tr.real()) + " is not 1");
  }

  ComplexMatrix rho = hermitian_part(m);
  SpectralDecomposition spectrum = eig_hermitian(rho, jacobi);
  const double lambda_min = spectrum.eigenvalues.front();
  if (lambda_min < -kNegativeEigenTol) {
    throw StateError("validate_density: negative eigenvalue " + std::to_string(lambda_min));
  }
  if (eigen_floor > 0.0 && lambda_min < eigen_floor - kFloorSlack) {
    throw StateError("validate_density: min eigenvalue " + std::to_string(lambda_min) +
                     " below eigen-floor " + std::to_string(eigen_floor));
  }
  for (double& lambda : spectrum.eigenvalues) lambda = std::max(lambda, 0.0);
  return DensityMatrix(std::move(rho), std::move(spectrum), eigen_floor);
}

CenteredObservable center(const DensityMatrix& rho, const Observable& h) {
  require_dim(rho, h.matrix(), "center");
  const double mean = trace_product({rho.matrix(), h.matrix()}).real();
  ComplexMatrix shifted = h.matrix();
  for (std::size_t i = 0; i < shifted.dim(); ++i) shifted(i, i) -= mean;
  return {std::move(shifted), mean};
}

double variance(const DensityMatrix& rho, const Observable& h) {
  require_dim(rho, h.matrix(), "variance");
  const double second = trace_product({rho.matrix(), h.matrix(), h.matrix()}).real();
  const double mean = trace_product({rho.matrix(), h.matrix()}).real();
  return second - mean * mean;
}

complex_t covariance(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_dim(rho, a.matrix(), "covariance");
  require_dim(rho, b.matrix(), "covariance");
  const CenteredObservable a0 = center(rho, a);
  const CenteredObservable b0 = center(rho, b);
  return trace_product({rho.matrix(), a0.matrix, b0.matrix});
}

DensityMatrix sample_density(const SamplerConfig& cfg, RandomStream& stream) {
  cfg.validate();
  const std::size_t n = cfg.dim;
  const ComplexMatrix g = ginibre(n, stream);
  ComplexMatrix w = g * g.adjoint();
  w *= 1.0 / w.trace().real();
  w = hermitian_part(w);

  if (cfg.eigen_floor > 0.0) {
    const double lambda_min = eig_hermitian(w).eigenvalues.front();
    if (lambda_min < cfg.eigen_floor) {
      // (1 - eps) rho + eps I/n with eps = n * floor puts every eigenvalue at or above the floor.
      const double eps = static_cast<double>(n) * cfg.eigen_floor;
      w *= 1.0 - eps;
      for (std::size_t i = 0; i < n; ++i) w(i, i) += eps / static_cast<double>(n);
    }
  }
  return validate_density(w, cfg.eigen_floor);
}

Observable sample_observable(const SamplerConfig& cfg, RandomStream& stream) {
  cfg.validate();
  const ComplexMatrix g = ginibre(cfg.dim, stream);
  ComplexMatrix h = g + g.adjoint();
  h *= 0.5;
  return Observable(std::move(h));
}

Observable pauli(std::string_view name) {
  using namespace std::complex_literals;
  if (name == "x") return Observable(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
  if (name == "y") return Observable(ComplexMatrix::from_rows({{0.0, -1i}, {1i, 0.0}}));
  if (name == "z") return Observable(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}));
  if (name == "id") return Observable(ComplexMatrix::identity(2));
  throw DomainError("pauli: unknown name '" + std::string(name) + "'");
}

}  // namespace skewlab
