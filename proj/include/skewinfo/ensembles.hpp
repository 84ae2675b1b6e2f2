#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <optional>

#include "skewinfo/state.hpp"

namespace skewinfo {

// xoshiro256** seeded through splitmix64. Streams for parallel sampling are
// derived as Rng(seed ^ sample_index), so a sample depends only on the pair
// and never on scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  static Rng for_sample(std::uint64_t seed, std::uint64_t sample_index) {
    return Rng(seed ^ sample_index);
  }

  std::uint64_t next();
  // Uniform in (0, 1].
  double uniform();
  // Standard normal via Box-Muller.
  double gaussian();
  std::uint64_t below(std::uint64_t bound);

 private:
  std::array<std::uint64_t, 4> s_{};
  std::optional<double> spare_;
};

enum class EnsembleKind { ginibre_mixed, pure, rank_k, diagonal, degenerate_spectrum };

std::string_view to_string(EnsembleKind kind);
std::optional<EnsembleKind> parse_ensemble_kind(std::string_view name);

struct EnsembleSpec {
  std::size_t dim = 2;
  EnsembleKind kind = EnsembleKind::ginibre_mixed;
  std::size_t rank = 1;        // used by rank_k
  double purity_blend = 0.0;   // weight of the I/n admixture
  std::uint64_t seed = 0;
};

void validate(const EnsembleSpec& spec);

DensityMatrix random_density(const EnsembleSpec& spec);
DensityMatrix random_density(const EnsembleSpec& spec, Rng& rng);

// (M + M†)/2 where re and im of every entry of M are N(0, scale²); each
// entry of the result then has E|h_ij|² = scale².
Observable random_observable(std::size_t dim, double scale, std::uint64_t seed);
Observable random_observable(std::size_t dim, double scale, Rng& rng);

// Haar-like unitary from Gram-Schmidt QR of a Ginibre matrix with R's
// diagonal made real positive.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

}  // namespace skewinfo
