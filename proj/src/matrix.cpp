#include "skewinfo/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skewinfo/error.hpp"

namespace skewinfo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NegativeSpectrum: return "NegativeSpectrum";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::BadTrace: return "BadTrace";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw Error(ErrorKind::DimMismatch, "matrix dimension must be at least 1");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorKind::DimMismatch, "matrix rows must be square");
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * dim_));
    ++r;
  }
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

void require_same_dim(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.dim() != y.dim()) {
    throw Error(ErrorKind::DimMismatch,
                std::to_string(x.dim()) + " vs " + std::to_string(y.dim()));
  }
}

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y);
  ComplexMatrix out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) out(i, j) = x(i, j) + y(i, j);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y);
  ComplexMatrix out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) out(i, j) = x(i, j) - y(i, j);
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y);
  const std::size_t n = x.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex xik = x(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += xik * y(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& x) {
  ComplexMatrix out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) out(i, j) = s * x(i, j);
  return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& x) {
  ComplexMatrix out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) out(i, j) = s * x(i, j);
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& x) {
  ComplexMatrix out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) out(j, i) = std::conj(x(i, j));
  return out;
}

Complex trace(const ComplexMatrix& x) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) t += x(i, i);
  return t;
}

Complex trace_of_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y);
  Complex t = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t k = 0; k < x.dim(); ++k) t += x(i, k) * y(k, i);
  return t;
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  return x * y - y * x;
}

ComplexMatrix anticommutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  return x * y + y * x;
}

double frobenius_norm(const ComplexMatrix& x) {
  double s = 0.0;
  for (const Complex& v : x.data()) s += std::norm(v);
  return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& x, const ComplexMatrix& y) {
  return frobenius_norm(x - y);
}

double hermiticity_defect(const ComplexMatrix& x) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = i; j < x.dim(); ++j)
      worst = std::max(worst, std::abs(x(i, j) - std::conj(x(j, i))));
  return worst;
}

bool all_finite(const ComplexMatrix& x) {
  return std::all_of(x.data().begin(), x.data().end(), [](const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

ComplexMatrix hermitian_part(const ComplexMatrix& x) {
  ComplexMatrix out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    out(i, i) = x(i, i).real();
    for (std::size_t j = i + 1; j < x.dim(); ++j) {
      const Complex v = 0.5 * (x(i, j) + std::conj(x(j, i)));
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

}  // namespace skewinfo
