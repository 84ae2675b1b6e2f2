#pragma once

#include "skewinfo/matrix.hpp"
#include "skewinfo/state.hpp"

namespace skewinfo {

// H₀ = H − Tr[ρH]·I together with the mean it was shifted by.
struct CenteredObservable {
  ComplexMatrix matrix;
  double mean = 0.0;
};

// h_ij = ⟨φ_i|H₀|φ_j⟩ in the eigenbasis of ρ (same ordering as the spectral
// decomposition).
struct MatrixElements {
  ComplexMatrix values;

  Complex operator()(std::size_t i, std::size_t j) const { return values(i, j); }
  std::size_t dim() const noexcept { return values.dim(); }
};

struct UncertaintyReport {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double variance_a = 0.0;
  double variance_b = 0.0;
  double skew_a = 0.0;  // I_ρ(A)
  double skew_b = 0.0;
  double j_a = 0.0;
  double j_b = 0.0;
  double u_a = 0.0;
  double u_b = 0.0;
  Complex covariance;
  Complex correlation;
  Complex commutator_average;  // Tr ρ[A,B]
};

// Re Tr[ρH]; the imaginary part must be roundoff.
double expectation(const DensityMatrix& rho, const Observable& h);

CenteredObservable center(const DensityMatrix& rho, const Observable& h);

// V_ρ(H) = Tr[ρH₀²]
double variance(const DensityMatrix& rho, const Observable& h);

// Cov_ρ(A,B) = Tr[ρA₀B₀]
Complex covariance(const DensityMatrix& rho, const Observable& a, const Observable& b);

// I_ρ(H) = Tr[ρH₀²] − Tr[ρ^{1/2}H₀ρ^{1/2}H₀]
double wy_skew_information(const DensityMatrix& rho, const Observable& h);

// I_{ρ,α}(H) = ½Tr[(i[ρ^α,H])(i[ρ^{1−α},H])], α strictly inside (0, 1).
double wyd_skew_information(const DensityMatrix& rho, const Observable& h, double alpha);

// J_ρ(H) = ½Tr[({ρ^{1/2},H₀})²]
double j_quantity(const DensityMatrix& rho, const Observable& h);

// U_ρ(H) = √(I·J), with a roundoff-negative product clamped to zero.
double u_quantity(const DensityMatrix& rho, const Observable& h);

// Corr_ρ(X,Y) = Tr[ρX†Y] − Tr[ρ^{1/2}X†ρ^{1/2}Y] for arbitrary operators.
Complex correlation(const DensityMatrix& rho, const ComplexMatrix& x, const ComplexMatrix& y);
Complex correlation(const DensityMatrix& rho, const Observable& a, const Observable& b);

// Tr ρ[A,B]
Complex commutator_average(const DensityMatrix& rho, const Observable& a, const Observable& b);

MatrixElements matrix_elements(const DensityMatrix& rho, const Observable& h);

// Σ_{i<j} (√λ_i − √λ_j)² |h_ij|²
double spectral_skew_information(const DensityMatrix& rho, const Observable& h);

// Σ_{i<j} (√λ_i + √λ_j)² |h_ij|²
double spectral_j_lower_bound(const DensityMatrix& rho, const Observable& h);

// 2 Σ_i λ_i h_ii², the part of J dropped by the spectral lower bound.
double spectral_j_slack(const DensityMatrix& rho, const Observable& h);

UncertaintyReport full_report(const DensityMatrix& rho, const Observable& a, const Observable& b);

// Alternative evaluation routes, kept for cross-checking the primary ones.
namespace alt {

// Tr[ρH²] − Tr[ρ^{1/2}Hρ^{1/2}H], no centering.
double wy_skew_information_uncentered(const DensityMatrix& rho, const Observable& h);

// ½Tr[(i[ρ^{1/2},H₀])²]
double wy_skew_information_commutator(const DensityMatrix& rho, const Observable& h);

// 2V − I
double j_quantity_from_variance(const DensityMatrix& rho, const Observable& h);

// √(V² − (V − I)²)
double u_quantity_from_variance(const DensityMatrix& rho, const Observable& h);

// Tr[ρH²] − Tr[ρH]²
double variance_uncentered(const DensityMatrix& rho, const Observable& h);

}  // namespace alt

}  // namespace skewinfo
