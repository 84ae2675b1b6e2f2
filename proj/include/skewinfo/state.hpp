#pragma once

#include "skewinfo/matrix.hpp"
#include "skewinfo/spectral.hpp"

namespace skewinfo {

inline constexpr double kTraceTolerance = 1e-10;

// Validated quantum state: Hermitian, PSD and unit trace, each within 1e-10.
// The stored matrix is the exactly Hermitian part of the input.
// The spectral decomposition and ρ^{1/2} are computed once at construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix rho);

  const ComplexMatrix& matrix() const noexcept { return rho_; }
  const SpectralDecomposition& spectral() const noexcept { return spectral_; }
  const ComplexMatrix& sqrt() const noexcept { return sqrt_; }
  std::size_t dim() const noexcept { return rho_.dim(); }

  // ρ^p for p in (0, 1].
  ComplexMatrix power(double p) const;

 private:
  ComplexMatrix rho_;
  SpectralDecomposition spectral_;
  ComplexMatrix sqrt_;
};

// Validated Hermitian matrix, stored as its exactly Hermitian part.
class Observable {
 public:
  explicit Observable(ComplexMatrix h);

  const ComplexMatrix& matrix() const noexcept { return h_; }
  std::size_t dim() const noexcept { return h_.dim(); }

 private:
  ComplexMatrix h_;
};

}  // namespace skewinfo
