#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "skewinfo/ensembles.hpp"
#include "skewinfo/matrix.hpp"

namespace skewinfo {

enum class Objective {
  min_gap_false_cov_variant,
  min_gap_re_ordering,
  sign_witnesses_lhs_difference,
};

std::string_view to_string(Objective objective);
// Accepts the full names and the short CLI forms (false_cov_variant,
// re_ordering / false_re_ordering, sign_witnesses).
std::optional<Objective> parse_objective(std::string_view name);

struct SearchTask {
  Objective objective = Objective::min_gap_false_cov_variant;
  std::size_t dim = 2;
  std::size_t samples = 1;
  EnsembleSpec state;              // dim and seed are taken from the task
  double observable_scale = 1.0;
  bool refine = false;
  std::size_t refine_steps = 500;
  std::size_t top_k = 10;
  std::uint64_t seed = 0;
  // Defaults to on for dim 2, where the known counterexamples live.
  std::optional<bool> inject_known;
  unsigned threads = 1;
};

void validate(const SearchTask& task);

// Injected known triples carry negative sample indices (-1, -2, ...).
struct Witness {
  ComplexMatrix rho;
  ComplexMatrix a;
  ComplexMatrix b;
  double objective_value = 0.0;
  std::int64_t sample_index = 0;
  bool refined = false;
};

struct SearchResult {
  std::vector<Witness> witnesses;
  std::size_t evaluated = 0;
  // Only meaningful for sign_witnesses_lhs_difference; a missing sign is a
  // NoWitness condition that is reported rather than thrown.
  bool found_negative = false;
  bool found_positive = false;
};

// Objective value through the public quantities/relations API.
double evaluate_objective(Objective objective, const ComplexMatrix& rho, const ComplexMatrix& a,
                          const ComplexMatrix& b);

// (ρ, A, B) for random candidate `sample_index`; depends only on the task and
// the index.
Witness sample_candidate(const SearchTask& task, std::uint64_t sample_index);

SearchResult run_search(const SearchTask& task);

// Coordinate-wise random hill descent. Never worsens the objective: for
// min-gap objectives it lowers the value; for the sign objective it pushes the
// value away from zero without changing its sign.
Witness refine_witness(const Witness& w, Objective objective, std::size_t steps, std::uint64_t seed);

}  // namespace skewinfo
