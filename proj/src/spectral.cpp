#include "skewinfo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "skewinfo/error.hpp"

namespace skewinfo {
namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Zeroes a(p, q) with the unitary J = [[c, s e], [-s conj(e), c]] acting on
// the (p, q) plane, where e is the phase of a(p, q). a <- J† a J, v <- v J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex e = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpq = s * e;
  const Complex jqp = -s * std::conj(e);
  const std::size_t n = a.dim();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp + jqp * akq;
    a(k, q) = jpq * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp + jqp * vkq;
    v(k, q) = jpq * vkp + c * vkq;
  }
}

void fix_phase(ComplexMatrix& v, std::size_t col) {
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t r = 0; r < v.dim(); ++r) {
    const double m = std::abs(v(r, col));
    if (m > best) {
      best = m;
      arg = r;
    }
  }
  if (best <= 0.0) return;
  const Complex phase = std::conj(v(arg, col)) / best;
  for (std::size_t r = 0; r < v.dim(); ++r) v(r, col) *= phase;
  v(arg, col) = v(arg, col).real();
}

}  // namespace

ComplexMatrix SpectralDecomposition::in_eigenbasis(const ComplexMatrix& x) const {
  require_same_dim(eigenvectors, x);
  return adjoint(eigenvectors) * x * eigenvectors;
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m, JacobiOptions options) {
  if (!all_finite(m)) throw Error(ErrorKind::NonFinite, "matrix has non-finite entries");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTolerance) {
    throw Error(ErrorKind::NotHermitian, "max |M - M†| = " + std::to_string(defect));
  }

  const std::size_t n = m.dim();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = options.relative_off_threshold * frobenius_norm(a);

  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep == options.max_sweeps) {
      throw Error(ErrorKind::NoConvergence,
                  "off-diagonal norm above threshold after " + std::to_string(sweep) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweep;
  }

  for (std::size_t j = 0; j < n; ++j) fix_phase(v, j);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const double lx = a(x, x).real();
    const double ly = a(y, y).real();
    if (lx != ly) return lx > ly;
    return v(0, x).real() > v(0, y).real();
  });

  SpectralDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, j) = v(r, order[j]);
  }
  return out;
}

double eigenvalue_power(double lambda, double p, double scale) {
  if (lambda <= kRoundoffEigenvalue * std::max(1.0, scale)) return 0.0;
  return p == 0.5 ? std::sqrt(lambda) : std::pow(lambda, p);
}

ComplexMatrix matrix_power(const SpectralDecomposition& s, double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::ExponentOutOfRange, "exponent must lie in (0, 1], got " + std::to_string(p));
  }
  for (double l : s.eigenvalues) {
    if (l < -kSpectrumTolerance) {
      throw Error(ErrorKind::NegativeSpectrum, "eigenvalue " + std::to_string(l));
    }
  }
  const double top = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.front();
  return s.apply([p, top](double l) { return eigenvalue_power(l, p, top); });
}

}  // namespace skewinfo
