#pragma once

#include <vector>

#include "skewinfo/matrix.hpp"

namespace skewinfo {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kSpectrumTolerance = 1e-10;
// Eigenvalues within this multiple of max(1, λ_max) of zero are roundoff and
// are treated as exact zeros by fractional powers.
inline constexpr double kRoundoffEigenvalue = 1e-14;

// Eigenvalues sorted descending; eigenvectors(:, j) belongs to eigenvalues[j].
// Each eigenvector is scaled so its largest-magnitude component is real and
// positive.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  std::size_t dim() const noexcept { return eigenvalues.size(); }
  Complex component(std::size_t row, std::size_t j) const { return eigenvectors(row, j); }

  // Σ_j f(λ_j) |φ_j⟩⟨φ_j|
  template <typename F>
  ComplexMatrix apply(F&& f) const {
    const std::size_t n = dim();
    ComplexMatrix out(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double w = f(eigenvalues[j]);
      if (w == 0.0) continue;
      for (std::size_t r = 0; r < n; ++r) {
        const Complex vr = w * eigenvectors(r, j);
        for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(eigenvectors(c, j));
      }
    }
    return out;
  }

  ComplexMatrix reconstruct() const {
    return apply([](double l) { return l; });
  }

  // ⟨φ_i|X|φ_j⟩ for all i, j.
  ComplexMatrix in_eigenbasis(const ComplexMatrix& x) const;
};

// max(λ, 0)^p, with roundoff-scale λ flushed to zero first. `scale` is the
// largest eigenvalue of the decomposed matrix.
double eigenvalue_power(double lambda, double p, double scale);

struct JacobiOptions {
  double relative_off_threshold = 1e-12;
  int max_sweeps = 100;
};

// Cyclic complex Jacobi. Throws NotHermitian / NoConvergence.
SpectralDecomposition hermitian_eig(const ComplexMatrix& m, JacobiOptions options = {});

// Σ_j max(λ_j, 0)^p |φ_j⟩⟨φ_j| for p in (0, 1]. Eigenvalues in [-1e-10, 0) are
// clamped to zero; anything more negative throws NegativeSpectrum. Positive
// eigenvalues below kRoundoffEigenvalue·max(1, λ_max) are also zeroed: their
// p-th power would otherwise turn 1e-17 noise into 1e-9 structure.
ComplexMatrix matrix_power(const SpectralDecomposition& s, double p);

}  // namespace skewinfo
