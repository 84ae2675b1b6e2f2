#include "skewinfo/relations.hpp"

#include <algorithm>
#include <cmath>

namespace skewinfo {
namespace {

double quarter_commutator_sq(const UncertaintyReport& r) {
  return 0.25 * std::norm(r.commutator_average);
}

double sq(double x) { return x * x; }

}  // namespace

std::string_view to_string(RelationId id) {
  switch (id) {
    case RelationId::heisenberg: return "heisenberg";
    case RelationId::schrodinger: return "schrodinger";
    case RelationId::luo: return "luo";
    case RelationId::schrodinger_wy: return "schrodinger_wy";
    case RelationId::false_cov_variant: return "false_cov_variant";
    case RelationId::false_re_ordering: return "false_re_ordering";
  }
  return "unknown";
}

std::optional<RelationId> parse_relation_id(std::string_view name) {
  for (RelationId id : kAllRelations)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

bool is_theorem(RelationId id) {
  return std::find(std::begin(kTheorems), std::end(kTheorems), id) != std::end(kTheorems);
}

InequalityVerdict make_verdict(RelationId id, double lhs, double rhs) {
  const double gap = lhs - rhs;
  return {id, lhs, rhs, gap, gap >= kHoldsThreshold};
}

InequalityVerdict evaluate(RelationId id, const UncertaintyReport& r) {
  const double re_cov_sq = sq(r.covariance.real());
  const double re_corr_sq = sq(r.correlation.real());
  switch (id) {
    case RelationId::heisenberg:
      return make_verdict(id, r.variance_a * r.variance_b, quarter_commutator_sq(r));
    case RelationId::schrodinger:
      return make_verdict(id, r.variance_a * r.variance_b - re_cov_sq, quarter_commutator_sq(r));
    case RelationId::luo:
      return make_verdict(id, r.u_a * r.u_b, quarter_commutator_sq(r));
    case RelationId::schrodinger_wy:
      return make_verdict(id, r.u_a * r.u_b - re_corr_sq, quarter_commutator_sq(r));
    case RelationId::false_cov_variant:
      return make_verdict(id, r.u_a * r.u_b - re_cov_sq, quarter_commutator_sq(r));
    case RelationId::false_re_ordering:
      return make_verdict(id, re_cov_sq, re_corr_sq);
  }
  return make_verdict(id, 0.0, 0.0);
}

InequalityVerdict evaluate(RelationId id, const DensityMatrix& rho, const Observable& a,
                           const Observable& b) {
  return evaluate(id, full_report(rho, a, b));
}

InequalityVerdict check_heisenberg(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  return evaluate(RelationId::heisenberg, rho, a, b);
}

InequalityVerdict check_schrodinger(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  return evaluate(RelationId::schrodinger, rho, a, b);
}

InequalityVerdict check_luo(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  return evaluate(RelationId::luo, rho, a, b);
}

InequalityVerdict check_schrodinger_wy(const DensityMatrix& rho, const Observable& a,
                                       const Observable& b) {
  return evaluate(RelationId::schrodinger_wy, rho, a, b);
}

InequalityVerdict eval_false_cov_variant(const DensityMatrix& rho, const Observable& a,
                                         const Observable& b) {
  return evaluate(RelationId::false_cov_variant, rho, a, b);
}

InequalityVerdict eval_re_ordering(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  return evaluate(RelationId::false_re_ordering, rho, a, b);
}

double eval_lhs_difference(const UncertaintyReport& r) {
  const double schrodinger_lhs = r.variance_a * r.variance_b - sq(r.covariance.real());
  const double wy_lhs = r.u_a * r.u_b - sq(r.correlation.real());
  return schrodinger_lhs - wy_lhs;
}

double eval_lhs_difference(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  return eval_lhs_difference(full_report(rho, a, b));
}

bool chain_is_monotone(const ProofChainTrace& t, double tolerance) {
  return t.t_corr_sq <= t.t_triangle + tolerance && t.t_triangle <= t.t_schwarz + tolerance &&
         t.t_schwarz <= t.t_ij + tolerance && t.t_corr_sq <= t.t_ji + tolerance &&
         t.t_corr_sq <= t.t_uu + tolerance;
}

ProofChainTrace proof_chain(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  const UncertaintyReport r = full_report(rho, a, b);
  const MatrixElements ea = matrix_elements(rho, a);
  const MatrixElements eb = matrix_elements(rho, b);
  const auto& lambda = rho.spectral().eigenvalues;
  const std::size_t n = lambda.size();

  std::vector<double> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = eigenvalue_power(lambda[i], 0.5, lambda.front());

  double triangle = 0.0;
  double skew_sum_a = 0.0;
  double anti_sum_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double li = std::max(lambda[i], 0.0);
      const double lj = std::max(lambda[j], 0.0);
      const double weight = std::abs(li - root[i] * root[j]) + std::abs(lj - root[j] * root[i]);
      triangle += weight * std::abs(ea(i, j)) * std::abs(eb(j, i));
      skew_sum_a += sq(root[i] - root[j]) * std::norm(ea(i, j));
      anti_sum_b += sq(root[i] + root[j]) * std::norm(eb(i, j));
    }
  }

  ProofChainTrace t;
  t.t_corr_sq = std::norm(r.correlation);
  t.t_triangle = triangle * triangle;
  t.t_schwarz = skew_sum_a * anti_sum_b;
  t.t_ij = r.skew_a * r.j_b;
  t.t_ji = r.skew_b * r.j_a;
  t.t_uu = r.u_a * r.u_b;
  return t;
}

}  // namespace skewinfo
