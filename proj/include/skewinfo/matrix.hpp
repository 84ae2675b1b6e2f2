#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace skewinfo {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> data() const noexcept { return data_; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator*(Complex s, const ComplexMatrix& x);
ComplexMatrix operator*(double s, const ComplexMatrix& x);

inline ComplexMatrix mat_mul(const ComplexMatrix& x, const ComplexMatrix& y) { return x * y; }
inline ComplexMatrix mat_add(const ComplexMatrix& x, const ComplexMatrix& y) { return x + y; }
inline ComplexMatrix scalar_mul(Complex s, const ComplexMatrix& x) { return s * x; }

ComplexMatrix adjoint(const ComplexMatrix& x);
Complex trace(const ComplexMatrix& x);

// Tr[XY] without forming the product.
Complex trace_of_product(const ComplexMatrix& x, const ComplexMatrix& y);

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix anticommutator(const ComplexMatrix& x, const ComplexMatrix& y);

double frobenius_norm(const ComplexMatrix& x);
double frobenius_distance(const ComplexMatrix& x, const ComplexMatrix& y);

// max_ij |X_ij - conj(X_ji)|
double hermiticity_defect(const ComplexMatrix& x);
bool all_finite(const ComplexMatrix& x);

// (X + X†)/2 with an exactly real diagonal.
ComplexMatrix hermitian_part(const ComplexMatrix& x);

void require_same_dim(const ComplexMatrix& x, const ComplexMatrix& y);

}  // namespace skewinfo
