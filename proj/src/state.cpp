#include "skewinfo/state.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "skewinfo/error.hpp"

namespace skewinfo {
namespace {

void require_hermitian(const ComplexMatrix& m, const char* what) {
  if (m.dim() == 0) throw Error(ErrorKind::DimMismatch, std::string(what) + " is empty");
  if (!all_finite(m)) throw Error(ErrorKind::NonFinite, std::string(what) + " has non-finite entries");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTolerance) {
    throw Error(ErrorKind::NotHermitian,
                std::string(what) + ": max |M - M†| = " + std::to_string(defect));
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
  require_hermitian(rho_, "density matrix");
  const Complex tr = trace(rho_);
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw Error(ErrorKind::BadTrace, "Tr rho = " + std::to_string(tr.real()) + " (expected 1)");
  }
  rho_ = hermitian_part(rho_);
  spectral_ = hermitian_eig(rho_);
  if (spectral_.eigenvalues.back() < -kSpectrumTolerance) {
    throw Error(ErrorKind::NegativeSpectrum,
                "density matrix eigenvalue " + std::to_string(spectral_.eigenvalues.back()));
  }
  sqrt_ = matrix_power(spectral_, 0.5);
}

ComplexMatrix DensityMatrix::power(double p) const {
  if (p == 0.5) return sqrt_;
  return matrix_power(spectral_, p);
}

Observable::Observable(ComplexMatrix h) : h_(std::move(h)) {
  require_hermitian(h_, "observable");
  h_ = hermitian_part(h_);
}

}  // namespace skewinfo
