#include "skewinfo/ensembles.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "skewinfo/error.hpp"

namespace skewinfo {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

Complex complex_gaussian(Rng& rng) {
  const double re = rng.gaussian();
  const double im = rng.gaussian();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

// G G† / Tr(G G†) for an n×k Ginibre block.
ComplexMatrix normalized_wishart(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<Complex> g(n * k);
  for (auto& v : g) v = complex_gaussian(rng);
  ComplexMatrix w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t c = 0; c < k; ++c) s += g[i * k + c] * std::conj(g[j * k + c]);
      w(i, j) = s;
    }
  w = hermitian_part(w);
  return (1.0 / trace(w).real()) * w;
}

ComplexMatrix conjugate_diagonal(const ComplexMatrix& u, const std::vector<double>& diag) {
  return u * ComplexMatrix::diagonal(diag) * adjoint(u);
}

ComplexMatrix blend_with_identity(const ComplexMatrix& m, double beta) {
  const std::size_t n = m.dim();
  ComplexMatrix out = (1.0 - beta) * m;
  for (std::size_t i = 0; i < n; ++i) out(i, i) += beta / static_cast<double>(n);
  return out;
}

// Remove the trace drift left by floating point so validation never sees it.
ComplexMatrix renormalize(ComplexMatrix m) {
  m = hermitian_part(m);
  const double tr = trace(m).real();
  return (1.0 / tr) * m;
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto& word : s_) word = splitmix64(state);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

std::string_view to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::ginibre_mixed: return "ginibre_mixed";
    case EnsembleKind::pure: return "pure";
    case EnsembleKind::rank_k: return "rank_k";
    case EnsembleKind::diagonal: return "diagonal";
    case EnsembleKind::degenerate_spectrum: return "degenerate_spectrum";
  }
  return "unknown";
}

std::optional<EnsembleKind> parse_ensemble_kind(std::string_view name) {
  for (EnsembleKind k : {EnsembleKind::ginibre_mixed, EnsembleKind::pure, EnsembleKind::rank_k,
                         EnsembleKind::diagonal, EnsembleKind::degenerate_spectrum}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

void validate(const EnsembleSpec& spec) {
  if (spec.dim < 2) throw Error(ErrorKind::BadSpec, "dim must be at least 2");
  if (!(spec.purity_blend >= 0.0 && spec.purity_blend <= 1.0)) {
    throw Error(ErrorKind::BadSpec, "purity_blend must lie in [0, 1]");
  }
  if (spec.kind == EnsembleKind::rank_k && (spec.rank < 1 || spec.rank > spec.dim)) {
    throw Error(ErrorKind::BadSpec, "rank_k requires 1 <= k <= dim, got k = " + std::to_string(spec.rank));
  }
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix q(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) q(i, j) = complex_gaussian(rng);
  // Modified Gram-Schmidt over columns; R's diagonal comes out real positive.
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex proj = 0.0;
      for (std::size_t r = 0; r < dim; ++r) proj += std::conj(q(r, k)) * q(r, j);
      for (std::size_t r = 0; r < dim; ++r) q(r, j) -= proj * q(r, k);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += std::norm(q(r, j));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < dim; ++r) q(r, j) /= norm;
  }
  return q;
}

DensityMatrix random_density(const EnsembleSpec& spec) {
  Rng rng(spec.seed);
  return random_density(spec, rng);
}

DensityMatrix random_density(const EnsembleSpec& spec, Rng& rng) {
  validate(spec);
  const std::size_t n = spec.dim;
  ComplexMatrix m;
  switch (spec.kind) {
    case EnsembleKind::ginibre_mixed:
      m = normalized_wishart(n, n, rng);
      break;
    case EnsembleKind::pure:
      m = normalized_wishart(n, 1, rng);
      break;
    case EnsembleKind::rank_k:
      m = normalized_wishart(n, spec.rank, rng);
      break;
    case EnsembleKind::diagonal: {
      std::vector<double> weights(n);
      double total = 0.0;
      for (auto& w : weights) {
        w = std::norm(complex_gaussian(rng));
        total += w;
      }
      for (auto& w : weights) w /= total;
      m = ComplexMatrix::diagonal(weights);
      break;
    }
    case EnsembleKind::degenerate_spectrum: {
      // Doubly degenerate top eigenvalue; the remaining quarter of the mass
      // is spread evenly (itself degenerate once n ≥ 4).
      const double rest = n > 2 ? 0.25 : 0.0;
      std::vector<double> spectrum(n, rest / static_cast<double>(n > 2 ? n - 2 : 1));
      spectrum[0] = spectrum[1] = 0.5 * (1.0 - rest);
      m = conjugate_diagonal(random_unitary(n, rng), spectrum);
      break;
    }
  }
  if (spec.purity_blend == 1.0) return DensityMatrix(blend_with_identity(m, 1.0));
  if (spec.purity_blend > 0.0) m = blend_with_identity(m, spec.purity_blend);
  return DensityMatrix(renormalize(std::move(m)));
}

Observable random_observable(std::size_t dim, double scale, std::uint64_t seed) {
  Rng rng(seed);
  return random_observable(dim, scale, rng);
}

Observable random_observable(std::size_t dim, double scale, Rng& rng) {
  if (dim < 2) throw Error(ErrorKind::BadSpec, "observable dim must be at least 2");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw Error(ErrorKind::BadSpec, "scale must be positive");
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex(scale * rng.gaussian(), scale * rng.gaussian());
  return Observable(hermitian_part(m));
}

}  // namespace skewinfo
