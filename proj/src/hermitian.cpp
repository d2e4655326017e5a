#include "skewlab/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "skewlab/errors.hpp"

namespace skewlab {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

bool is_integer(double x) { return std::floor(x) == x; }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<complex_t> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw DimensionError("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                         " entries, got " + std::to_string(data_.size()));
  }
  if (!all_finite()) throw DomainError("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<complex_t>> rows) {
  const std::size_t n = rows.size();
  std::vector<complex_t> data;
  data.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionError("ComplexMatrix::from_rows: matrix is not square");
    data.insert(data.end(), row.begin(), row.end());
  }
  return ComplexMatrix(n, std::move(data));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

complex_t ComplexMatrix::trace() const noexcept {
  complex_t t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const complex_t& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double ComplexMatrix::hermiticity_defect() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complex_t scale) noexcept {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const complex_t a = lhs(i, k);
      if (a == complex_t{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) noexcept {
  return m.hermiticity_defect() <= rel_tol * std::max(1.0, m.frobenius_norm());
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  const std::size_t n = dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      complex_t s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += eigenvectors(i, k) * eigenvalues[k] * std::conj(eigenvectors(j, k));
      out(i, j) = s;
    }
  return out;
}

ComplexMatrix SpectralDecomposition::to_eigenbasis(const ComplexMatrix& m) const {
  if (m.dim() != dim()) throw DimensionError("to_eigenbasis: dimension mismatch");
  return eigenvectors.adjoint() * m * eigenvectors;
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y, "commutator");
  return x * y - y * x;
}

ComplexMatrix anti_commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y, "anti_commutator");
  return x * y + y * x;
}

complex_t trace_product(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) throw DomainError("trace_product: empty factor list");
  for (const auto& f : factors) require_same_dim(factors.front(), f, "trace_product");
  if (factors.size() == 1) return factors.front().trace();

  ComplexMatrix head = factors.front();
  for (std::size_t k = 1; k + 1 < factors.size(); ++k) head = head * factors[k];
  // Tr[P Q] = sum_ij P_ij Q_ji
  const ComplexMatrix& last = factors.back();
  const std::size_t n = head.dim();
  complex_t t = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t += head(i, j) * last(j, i);
  return t;
}

complex_t trace_product(std::initializer_list<ComplexMatrix> factors) {
  return trace_product(std::span<const ComplexMatrix>(factors.begin(), factors.size()));
}

SpectralDecomposition eig_hermitian(const ComplexMatrix& m, const JacobiOptions& options) {
  const std::size_t n = m.dim();
  if (n == 0) throw DimensionError("eig_hermitian: empty matrix");
  if (!m.all_finite()) throw DomainError("eig_hermitian: non-finite entry");
  if (!is_hermitian(m)) throw NotHermitianError("eig_hermitian: matrix is not Hermitian");

  // Work on the exactly Hermitian part.
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const complex_t z = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = options.rel_tol * a.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > threshold) {
    if (sweep++ >= options.max_sweeps) {
      throw NumericalError("eig_hermitian: no convergence after " +
                           std::to_string(options.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        // Phase e^{i phi} = a_pq / |a_pq| turns the 2x2 block real; then a real Jacobi rotation.
        const complex_t phase = a(p, q) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q); A <- J^dagger A J, V <- V J.
        const complex_t conj_phase = std::conj(phase);
        const complex_t jqp = -s * conj_phase;
        const complex_t jqq = c * conj_phase;
        for (std::size_t k = 0; k < n; ++k) {
          const complex_t akp = a(k, p);
          const complex_t akq = a(k, q);
          a(k, p) = c * akp + jqp * akq;
          a(k, q) = s * akp + jqq * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const complex_t apk = a(p, k);
          const complex_t aqk = a(q, k);
          a(p, k) = c * apk + std::conj(jqp) * aqk;
          a(q, k) = s * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        for (std::size_t k = 0; k < n; ++k) {
          const complex_t vkp = v(k, p);
          const complex_t vkq = v(k, q);
          v(k, p) = c * vkp + jqp * vkq;
          v(k, q) = s * vkp + jqq * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  SpectralDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix frac_power(const SpectralDecomposition& decomposition, double exponent,
                         double floor) {
  if (!std::isfinite(exponent)) throw DomainError("frac_power: non-finite exponent");
  const std::size_t n = decomposition.dim();
  const bool integral = is_integer(exponent);

  std::vector<double> powered(n);
  for (std::size_t k = 0; k < n; ++k) {
    double lambda = decomposition.eigenvalues[k];
    if (std::abs(lambda) <= kEigenZeroClamp) lambda = 0.0;
    if (exponent < 0.0 && (lambda <= 0.0 || lambda < floor)) {
      throw DomainError("frac_power: eigenvalue " + std::to_string(lambda) +
                        " below eigen-floor for negative exponent " + std::to_string(exponent));
    }
    if (!integral && lambda < 0.0) {
      throw DomainError("frac_power: negative eigenvalue " + std::to_string(lambda) +
                        " with non-integer exponent");
    }
    powered[k] = std::pow(lambda, exponent);
  }

  const ComplexMatrix& u = decomposition.eigenvectors;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      complex_t s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += u(i, k) * powered[k] * std::conj(u(j, k));
      if (i == j) {
        out(i, i) = s.real();
      } else {
        out(i, j) = s;
        out(j, i) = std::conj(s);
      }
    }
  }
  return out;
}

}  // namespace skewlab
