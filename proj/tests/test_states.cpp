#include "doctest.h"

#include <cmath>
#include <complex>

#include "skewlab/errors.hpp"
#include "skewlab/states.hpp"

using namespace skewlab;
using namespace std::complex_literals;

namespace {

const ComplexMatrix kRho = ComplexMatrix::diagonal({0.75, 0.25});

DensityMatrix qubit() { return validate_density(kRho); }
DensityMatrix maximally_mixed(std::size_t n) {
  return validate_density(ComplexMatrix::identity(n) * (1.0 / static_cast<double>(n)));
}

}  // namespace

TEST_CASE("validate_density examples") {
  const DensityMatrix rho = validate_density(kRho, 1e-8);
  CHECK(rho.eigenvalues()[0] == doctest::Approx(0.25));
  CHECK(rho.eigenvalues()[1] == doctest::Approx(0.75));
  CHECK(rho.eigen_floor() == 1e-8);
  CHECK(rho.invertible());

  CHECK_THROWS_AS(validate_density(ComplexMatrix::diagonal({0.6, 0.6})), StateError);
  CHECK_THROWS_AS(validate_density(ComplexMatrix::from_rows({{0.5, 0.5}, {-0.5, 0.5}})), NotHermitianError);
}

TEST_CASE("validate_density error paths") {
  CHECK_THROWS_AS(validate_density(ComplexMatrix()), DimensionError);
  CHECK_THROWS_AS(validate_density(ComplexMatrix::diagonal({1.5, -0.5})), StateError);
  // Pure state: fine without a floor, rejected once invertibility is demanded.
  const DensityMatrix pure = validate_density(ComplexMatrix::diagonal({1.0, 0.0}));
  CHECK_FALSE(pure.invertible());
  CHECK(pure.min_eigenvalue() == 0.0);
  CHECK_THROWS_AS(validate_density(ComplexMatrix::diagonal({1.0, 0.0}), 1e-8), StateError);
  CHECK_THROWS_AS(validate_density(kRho, -1.0), DomainError);
}

TEST_CASE("Observable requires a Hermitian matrix") {
  CHECK_NOTHROW(Observable(ComplexMatrix::from_rows({{1.0, 2.0 - 1i}, {2.0 + 1i, -3.0}})));
  CHECK_THROWS_AS(Observable(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})), NotHermitianError);
}

TEST_CASE("center examples") {
  const CenteredObservable z = center(qubit(), pauli("z"));
  CHECK(z.mean == doctest::Approx(0.5));
  CHECK(z.matrix == ComplexMatrix::diagonal({0.5, -1.5}));

  const CenteredObservable x = center(qubit(), pauli("x"));
  CHECK(x.mean == 0.0);
  CHECK(x.matrix == pauli("x").matrix());

  const CenteredObservable id = center(maximally_mixed(3), Observable(ComplexMatrix::identity(3)));
  CHECK(id.mean == doctest::Approx(1.0));
  CHECK(id.matrix.frobenius_norm() < 1e-15);

  CHECK_THROWS_AS(center(maximally_mixed(3), pauli("x")), DimensionError);
}

TEST_CASE("centered observable has zero expectation") {
  RandomStream stream(17);
  for (int k = 0; k < 200; ++k) {
    const SamplerConfig cfg{2 + static_cast<std::size_t>(k % 6), 17, 1e-8};
    const DensityMatrix rho = sample_density(cfg, stream);
    const CenteredObservable h0 = center(rho, sample_observable(cfg, stream));
    CHECK(std::abs(trace_product({rho.matrix(), h0.matrix})) <= 1e-10);
    CHECK(is_hermitian(h0.matrix));
  }
}

TEST_CASE("variance examples") {
  CHECK(variance(qubit(), pauli("x")) == doctest::Approx(1.0));
  CHECK(variance(qubit(), pauli("id")) == doctest::Approx(0.0));
  CHECK(variance(qubit(), pauli("z")) == doctest::Approx(0.75));
}

TEST_CASE("covariance examples") {
  const complex_t c = covariance(qubit(), pauli("x"), pauli("y"));
  CHECK(c.real() == doctest::Approx(0.0));
  CHECK(c.imag() == doctest::Approx(0.5));
  CHECK(std::abs(covariance(maximally_mixed(2), pauli("x"), pauli("y"))) < 1e-15);

  RandomStream stream(4);
  const SamplerConfig cfg{4, 4, 1e-8};
  const DensityMatrix rho = sample_density(cfg, stream);
  const Observable a = sample_observable(cfg, stream);
  const Observable b = sample_observable(cfg, stream);
  CHECK(covariance(rho, a, a).real() == doctest::Approx(variance(rho, a)).epsilon(1e-12));
  CHECK(std::abs(covariance(rho, a, a).imag()) < 1e-12);
  // Swapping the arguments conjugates the covariance.
  CHECK(std::abs(covariance(rho, a, b) - std::conj(covariance(rho, b, a))) < 1e-12);
}

TEST_CASE("complex covariance does not give a valid Schrodinger bound") {
  // V(A)V(B) - |Cov|^2 >= |Tr[rho[A,B]]|^2 / 4 fails with the complex covariance:
  // the imaginary part of Cov is exactly half the commutator expectation, so it is double counted.
  const DensityMatrix rho = validate_density(ComplexMatrix::diagonal({0.9, 0.1}));
  const double lhs = variance(rho, pauli("x")) * variance(rho, pauli("y")) -
                     std::norm(covariance(rho, pauli("x"), pauli("y")));
  const complex_t comm = trace_product({rho.matrix(), commutator(pauli("x").matrix(), pauli("y").matrix())});
  const double rhs = 0.25 * std::norm(comm);
  CHECK(lhs == doctest::Approx(0.36));
  CHECK(rhs == doctest::Approx(0.64));
  CHECK(lhs < rhs);
}

TEST_CASE("pauli matrices") {
  CHECK(pauli("x").matrix() == ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
  CHECK(pauli("y").matrix() == ComplexMatrix::from_rows({{0.0, -1i}, {1i, 0.0}}));
  CHECK(pauli("z").matrix() == ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}));
  CHECK_THROWS_AS(pauli("w"), DomainError);
}

TEST_CASE("sample_density contracts") {
  SUBCASE("dimension one") {
    RandomStream stream(1);
    const DensityMatrix rho = sample_density(SamplerConfig{1, 1, 0.0}, stream);
    CHECK(std::abs(rho.matrix()(0, 0) - 1.0) < 1e-15);
  }
  SUBCASE("same seed and path give identical matrices") {
    RandomStream s1(99, {3, 12});
    RandomStream s2(99, {3, 12});
    const SamplerConfig cfg{5, 99, 1e-6};
    CHECK(sample_density(cfg, s1).matrix() == sample_density(cfg, s2).matrix());
    CHECK(sample_observable(cfg, s1).matrix() == sample_observable(cfg, s2).matrix());
  }
  SUBCASE("different paths differ") {
    RandomStream s1(99, {3, 12});
    RandomStream s2(99, {3, 13});
    const SamplerConfig cfg{3, 99, 1e-6};
    CHECK_FALSE(sample_density(cfg, s1).matrix() == sample_density(cfg, s2).matrix());
  }
  SUBCASE("10^4 draws validate with unit trace and floor") {
    int failures = 0;
    for (std::uint64_t k = 0; k < 10000; ++k) {
      const std::size_t n = 2 + k % 7;
      const double floor = (k % 2 == 0) ? 1e-6 : 0.02;
      RandomStream stream(123, {n, k});
      const DensityMatrix rho = sample_density(SamplerConfig{n, 123, floor}, stream);
      if (std::abs(rho.matrix().trace().real() - 1.0) > 1e-12) ++failures;
      if (rho.min_eigenvalue() < floor - kFloorSlack) ++failures;
      if (!is_hermitian(rho.matrix(), 1e-12)) ++failures;
    }
    CHECK(failures == 0);
  }
  SUBCASE("config validation") {
    RandomStream stream(1);
    CHECK_THROWS_AS(sample_density(SamplerConfig{0, 1, 0.0}, stream), DomainError);
    CHECK_THROWS_AS(sample_density(SamplerConfig{4, 1, 0.25}, stream), DomainError);
  }
}

TEST_CASE("sample_observable contracts") {
  RandomStream stream(8);
  for (int k = 0; k < 500; ++k) {
    const Observable h = sample_observable(SamplerConfig{2 + static_cast<std::size_t>(k % 7), 8, 0.0}, stream);
    CHECK(h.matrix().hermiticity_defect() <= 1e-12);
  }
  const Observable one = sample_observable(SamplerConfig{1, 8, 0.0}, stream);
  CHECK(one.matrix()(0, 0).imag() == 0.0);
}

TEST_CASE("complex normal draws have unit second moment") {
  RandomStream stream(31);
  double sum = 0.0;
  const int n = 200000;
  for (int k = 0; k < n; ++k) sum += std::norm(stream.complex_normal());
  CHECK(sum / n == doctest::Approx(1.0).epsilon(0.01));
}
