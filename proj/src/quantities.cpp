#include "skewinfo/quantities.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "skewinfo/error.hpp"

namespace skewinfo {
namespace {

constexpr double kImagDust = 1e-12;
constexpr double kIdentityTolerance = 1e-9;

void require_dims(const DensityMatrix& rho, const ComplexMatrix& h) {
  require_same_dim(rho.matrix(), h);
}

// Real part of a trace that is real in exact arithmetic. The allowed
// imaginary dust scales with the magnitude of the summands.
double real_trace(Complex value, double scale, const char* what) {
  if (std::abs(value.imag()) > kImagDust * std::max(1.0, scale)) {
    throw Error(ErrorKind::Inconsistent,
                std::string(what) + " has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

double scale_of(const ComplexMatrix& h) {
  const double n = frobenius_norm(h);
  return n * n;
}

// √λ_i exactly as used to build ρ^{1/2}.
std::vector<double> root_spectrum(const DensityMatrix& rho) {
  const auto& ev = rho.spectral().eigenvalues;
  std::vector<double> root(ev.size());
  for (std::size_t i = 0; i < ev.size(); ++i) root[i] = eigenvalue_power(ev[i], 0.5, ev.front());
  return root;
}

}  // namespace

double expectation(const DensityMatrix& rho, const Observable& h) {
  require_dims(rho, h.matrix());
  return real_trace(trace_of_product(rho.matrix(), h.matrix()), frobenius_norm(h.matrix()),
                    "Tr[rho H]");
}

CenteredObservable center(const DensityMatrix& rho, const Observable& h) {
  const double mean = expectation(rho, h);
  ComplexMatrix h0 = h.matrix();
  for (std::size_t i = 0; i < h0.dim(); ++i) h0(i, i) -= mean;
  return {std::move(h0), mean};
}

double variance(const DensityMatrix& rho, const Observable& h) {
  const ComplexMatrix h0 = center(rho, h).matrix;
  return real_trace(trace_of_product(rho.matrix(), h0 * h0), scale_of(h0), "V");
}

Complex covariance(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_same_dim(a.matrix(), b.matrix());
  const ComplexMatrix a0 = center(rho, a).matrix;
  const ComplexMatrix b0 = center(rho, b).matrix;
  return trace_of_product(rho.matrix(), a0 * b0);
}

double wy_skew_information(const DensityMatrix& rho, const Observable& h) {
  const ComplexMatrix h0 = center(rho, h).matrix;
  const ComplexMatrix& s = rho.sqrt();
  const Complex value =
      trace_of_product(rho.matrix(), h0 * h0) - trace_of_product(s * h0, s * h0);
  return real_trace(value, scale_of(h0), "I");
}

double wyd_skew_information(const DensityMatrix& rho, const Observable& h, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::AlphaOutOfRange,
                "alpha must lie strictly inside (0, 1), got " + std::to_string(alpha));
  }
  require_dims(rho, h.matrix());
  const ComplexMatrix& hm = h.matrix();
  const ComplexMatrix left = commutator(rho.power(alpha), hm);
  const ComplexMatrix right = commutator(rho.power(1.0 - alpha), hm);
  // (i[X,H])(i[Y,H]) = −[X,H][Y,H]
  const Complex value = -0.5 * trace_of_product(left, right);
  return real_trace(value, scale_of(hm), "I_alpha");
}

double j_quantity(const DensityMatrix& rho, const Observable& h) {
  const ComplexMatrix h0 = center(rho, h).matrix;
  const ComplexMatrix anti = anticommutator(rho.sqrt(), h0);
  return real_trace(0.5 * trace_of_product(anti, anti), scale_of(h0), "J");
}

double u_quantity(const DensityMatrix& rho, const Observable& h) {
  const double product = wy_skew_information(rho, h) * j_quantity(rho, h);
  return std::sqrt(std::max(0.0, product));
}

Complex correlation(const DensityMatrix& rho, const ComplexMatrix& x, const ComplexMatrix& y) {
  require_dims(rho, x);
  require_same_dim(x, y);
  const ComplexMatrix xd = adjoint(x);
  const ComplexMatrix& s = rho.sqrt();
  return trace_of_product(rho.matrix(), xd * y) - trace_of_product(s * xd, s * y);
}

Complex correlation(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  return correlation(rho, a.matrix(), b.matrix());
}

Complex commutator_average(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_dims(rho, a.matrix());
  require_same_dim(a.matrix(), b.matrix());
  return trace_of_product(rho.matrix(), commutator(a.matrix(), b.matrix()));
}

MatrixElements matrix_elements(const DensityMatrix& rho, const Observable& h) {
  return {rho.spectral().in_eigenbasis(center(rho, h).matrix)};
}

double spectral_skew_information(const DensityMatrix& rho, const Observable& h) {
  const MatrixElements el = matrix_elements(rho, h);
  const std::vector<double> root = root_spectrum(rho);
  double sum = 0.0;
  for (std::size_t i = 0; i < el.dim(); ++i) {
    for (std::size_t j = i + 1; j < el.dim(); ++j) {
      const double d = root[i] - root[j];
      sum += d * d * std::norm(el(i, j));
    }
  }
  return sum;
}

double spectral_j_lower_bound(const DensityMatrix& rho, const Observable& h) {
  const MatrixElements el = matrix_elements(rho, h);
  const std::vector<double> root = root_spectrum(rho);
  double sum = 0.0;
  for (std::size_t i = 0; i < el.dim(); ++i) {
    for (std::size_t j = i + 1; j < el.dim(); ++j) {
      const double s = root[i] + root[j];
      sum += s * s * std::norm(el(i, j));
    }
  }
  return sum;
}

double spectral_j_slack(const DensityMatrix& rho, const Observable& h) {
  const MatrixElements el = matrix_elements(rho, h);
  const auto& lambda = rho.spectral().eigenvalues;
  double sum = 0.0;
  for (std::size_t i = 0; i < el.dim(); ++i) {
    const double hii = el(i, i).real();
    sum += std::max(lambda[i], 0.0) * hii * hii;
  }
  return 2.0 * sum;
}

UncertaintyReport full_report(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_dims(rho, a.matrix());
  require_same_dim(a.matrix(), b.matrix());

  UncertaintyReport r;
  r.mean_a = expectation(rho, a);
  r.mean_b = expectation(rho, b);

  const auto fill = [&](const Observable& h, double& v, double& i, double& j, double& u) {
    const double v_raw = variance(rho, h);
    const double i_raw = wy_skew_information(rho, h);
    const double j_raw = j_quantity(rho, h);
    const double tol = kIdentityTolerance * std::max(1.0, std::abs(v_raw));
    if (std::abs(j_raw - (2.0 * v_raw - i_raw)) > tol) {
      throw Error(ErrorKind::Inconsistent, "J != 2V - I beyond tolerance");
    }
    v = std::max(v_raw, 0.0);
    i = std::max(i_raw, 0.0);
    j = std::max(j_raw, 0.0);
    u = std::sqrt(std::max(0.0, i_raw * j_raw));
    const double u_def = std::sqrt(std::max(0.0, v_raw * v_raw - (v_raw - i_raw) * (v_raw - i_raw)));
    if (std::abs(u * u - u_def * u_def) > tol * std::max(1.0, std::abs(v_raw))) {
      throw Error(ErrorKind::Inconsistent, "U^2 != I J beyond tolerance");
    }
  };
  fill(a, r.variance_a, r.skew_a, r.j_a, r.u_a);
  fill(b, r.variance_b, r.skew_b, r.j_b, r.u_b);

  r.covariance = covariance(rho, a, b);
  r.correlation = correlation(rho, a, b);
  r.commutator_average = commutator_average(rho, a, b);
  return r;
}

namespace alt {

double wy_skew_information_uncentered(const DensityMatrix& rho, const Observable& h) {
  require_dims(rho, h.matrix());
  const ComplexMatrix& hm = h.matrix();
  const ComplexMatrix& s = rho.sqrt();
  const Complex value =
      trace_of_product(rho.matrix(), hm * hm) - trace_of_product(s * hm, s * hm);
  return real_trace(value, scale_of(hm), "I (uncentered)");
}

double wy_skew_information_commutator(const DensityMatrix& rho, const Observable& h) {
  const ComplexMatrix h0 = center(rho, h).matrix;
  const ComplexMatrix ic = Complex(0.0, 1.0) * commutator(rho.sqrt(), h0);
  return real_trace(0.5 * trace_of_product(ic, ic), scale_of(h0), "I (commutator)");
}

double j_quantity_from_variance(const DensityMatrix& rho, const Observable& h) {
  return 2.0 * variance(rho, h) - wy_skew_information(rho, h);
}

double u_quantity_from_variance(const DensityMatrix& rho, const Observable& h) {
  const double v = variance(rho, h);
  const double i = wy_skew_information(rho, h);
  return std::sqrt(std::max(0.0, v * v - (v - i) * (v - i)));
}

double variance_uncentered(const DensityMatrix& rho, const Observable& h) {
  const ComplexMatrix& hm = h.matrix();
  const double mean = expectation(rho, h);
  return real_trace(trace_of_product(rho.matrix(), hm * hm), scale_of(hm), "Tr[rho H^2]") -
         mean * mean;
}

}  // namespace alt

}  // namespace skewinfo
