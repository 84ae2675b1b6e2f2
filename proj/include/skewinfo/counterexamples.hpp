#pragma once

#include <string>
#include <vector>

#include "skewinfo/state.hpp"

namespace skewinfo {

// A concrete (ρ, A, B) triple.
struct Triple {
  std::string label;
  ComplexMatrix rho;
  ComplexMatrix a;
  ComplexMatrix b;
};

// ρ = diag(1, 3)/4, A = [[2,1],[1,2]], B = σ_x. Breaks U(A)U(B) − |Re Cov|² ≥
// ¼|Tr ρ[A,B]|² with gap exactly −3/4.
Triple cov_variant_counterexample();

// ρ = [[5,4],[4,5]]/10, A = [[4,4],[4,1]], B = [[5,−1],[−1,2]]. Breaks
// |Re Cov|² ≥ |Re Corr|² with gap 0.81² − 0.9² = −0.1539.
Triple re_ordering_counterexample();

std::vector<Triple> known_counterexamples();

}  // namespace skewinfo
