#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "skewinfo/quantities.hpp"

namespace skewinfo {

inline constexpr double kHoldsThreshold = -1e-9;

enum class RelationId {
  heisenberg,        // V(A)V(B) ≥ ¼|Tr ρ[A,B]|²
  schrodinger,       // V(A)V(B) − |Re Cov|² ≥ ¼|Tr ρ[A,B]|²
  luo,               // U(A)U(B) ≥ ¼|Tr ρ[A,B]|²
  schrodinger_wy,    // U(A)U(B) − |Re Corr|² ≥ ¼|Tr ρ[A,B]|²
  false_cov_variant, // U(A)U(B) − |Re Cov|² ≥ ¼|Tr ρ[A,B]|²  (not a theorem)
  false_re_ordering, // |Re Cov|² ≥ |Re Corr|²                (not a theorem)
};

inline constexpr RelationId kAllRelations[] = {
    RelationId::heisenberg,        RelationId::schrodinger,       RelationId::luo,
    RelationId::schrodinger_wy,    RelationId::false_cov_variant, RelationId::false_re_ordering,
};

inline constexpr RelationId kTheorems[] = {
    RelationId::heisenberg,
    RelationId::schrodinger,
    RelationId::luo,
    RelationId::schrodinger_wy,
};

std::string_view to_string(RelationId id);
std::optional<RelationId> parse_relation_id(std::string_view name);
bool is_theorem(RelationId id);

struct InequalityVerdict {
  RelationId relation_id = RelationId::heisenberg;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // lhs − rhs
  bool holds = true; // gap ≥ −1e-9
};

InequalityVerdict make_verdict(RelationId id, double lhs, double rhs);

// Squared-modulus pieces of the proof chain for |Corr|² ≤ U(A)U(B).
struct ProofChainTrace {
  double t_corr_sq = 0.0;   // |Corr(A,B)|²
  double t_triangle = 0.0;  // (Σ_{i<j} (|λ_i − √λ_iλ_j| + |λ_j − √λ_jλ_i|) |a_ij||b_ji|)²
  double t_schwarz = 0.0;   // Σ_{i<j}(√λ_i−√λ_j)²|a_ij|² · Σ_{i<j}(√λ_i+√λ_j)²|b_ij|²
  double t_ij = 0.0;        // I(A)J(B)
  double t_ji = 0.0;        // I(B)J(A)
  double t_uu = 0.0;        // U(A)U(B)
};

// True if the chain ordering holds within `tolerance`.
bool chain_is_monotone(const ProofChainTrace& t, double tolerance = 1e-9);

InequalityVerdict evaluate(RelationId id, const UncertaintyReport& r);
InequalityVerdict evaluate(RelationId id, const DensityMatrix& rho, const Observable& a,
                           const Observable& b);

InequalityVerdict check_heisenberg(const DensityMatrix& rho, const Observable& a, const Observable& b);
InequalityVerdict check_schrodinger(const DensityMatrix& rho, const Observable& a, const Observable& b);
InequalityVerdict check_luo(const DensityMatrix& rho, const Observable& a, const Observable& b);
InequalityVerdict check_schrodinger_wy(const DensityMatrix& rho, const Observable& a,
                                       const Observable& b);
InequalityVerdict eval_false_cov_variant(const DensityMatrix& rho, const Observable& a,
                                         const Observable& b);
InequalityVerdict eval_re_ordering(const DensityMatrix& rho, const Observable& a, const Observable& b);

// Schrödinger lhs minus the U/Corr lhs. Takes both signs.
double eval_lhs_difference(const UncertaintyReport& r);
double eval_lhs_difference(const DensityMatrix& rho, const Observable& a, const Observable& b);

ProofChainTrace proof_chain(const DensityMatrix& rho, const Observable& a, const Observable& b);

}  // namespace skewinfo
