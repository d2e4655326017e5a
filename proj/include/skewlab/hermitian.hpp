#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace skewlab {

using complex_t = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);
  /// Takes ownership of dim*dim row-major entries; throws on size mismatch or non-finite entries.
  ComplexMatrix(std::size_t dim, std::vector<complex_t> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  /// Nested-list literal, e.g. from_rows({{0, 1}, {1, 0}}).
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<complex_t>> rows);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  complex_t& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
  const complex_t& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  std::span<const complex_t> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  complex_t trace() const noexcept;
  double frobenius_norm() const noexcept;
  bool all_finite() const noexcept;
  /// ||M - M^dagger||_F.
  double hermiticity_defect() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(complex_t scale) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, complex_t scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(complex_t scale, ComplexMatrix rhs) { return rhs *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<complex_t> data_;
};

/// Hermitian within 1e-10 * max(1, ||M||_F).
bool is_hermitian(const ComplexMatrix& m, double rel_tol = 1e-10) noexcept;

/// Eigen-system of a Hermitian matrix: ascending eigenvalues, orthonormal eigenvector columns.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  std::size_t dim() const noexcept { return eigenvalues.size(); }
  /// U diag(lambda) U^dagger.
  ComplexMatrix reconstruct() const;
  /// <phi_i| M |phi_j> for all i, j, i.e. U^dagger M U.
  ComplexMatrix to_eigenbasis(const ComplexMatrix& m) const;
};

struct JacobiOptions {
  /// Converged once the off-diagonal Frobenius norm drops below rel_tol * ||M||_F.
  double rel_tol = 1e-13;
  int max_sweeps = 100;
};

/// XY - YX.
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);
/// XY + YX.
ComplexMatrix anti_commutator(const ComplexMatrix& x, const ComplexMatrix& y);

/// Trace of the ordered product factors[0] * factors[1] * ... ; the last
/// multiplication is folded into the trace so only n-2 full products are formed.
complex_t trace_product(std::span<const ComplexMatrix> factors);
complex_t trace_product(std::initializer_list<ComplexMatrix> factors);

/// Cyclic complex Jacobi eigensolver. Throws NotHermitianError or NumericalError.
SpectralDecomposition eig_hermitian(const ComplexMatrix& m, const JacobiOptions& options = {});

/// Eigenvalues with |lambda| <= this are treated as exactly zero before powering.
inline constexpr double kEigenZeroClamp = 1e-12;

/// Spectral calculus: sum_i lambda_i^a |phi_i><phi_i|.
///
/// Negative exponents need every eigenvalue strictly positive and at least
/// `floor`; non-integer exponents need every eigenvalue non-negative. A zero
/// eigenvalue raised to the power zero contributes its projector (0^0 = 1).
ComplexMatrix frac_power(const SpectralDecomposition& decomposition, double exponent,
                         double floor = 0.0);

}  // namespace skewlab
