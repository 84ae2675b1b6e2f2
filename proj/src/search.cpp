#include "skewinfo/search.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "skewinfo/counterexamples.hpp"
#include "skewinfo/error.hpp"
#include "skewinfo/relations.hpp"

namespace skewinfo {
namespace {

constexpr double kInitialStep = 0.1;
constexpr double kStepFloor = 1e-6;

struct Scored {
  double value;
  std::int64_t index;
};

bool lower_first(const Scored& x, const Scored& y) {
  return x.value != y.value ? x.value < y.value : x.index < y.index;
}

bool higher_first(const Scored& x, const Scored& y) {
  return x.value != y.value ? x.value > y.value : x.index < y.index;
}

// Keeps the k best under `better`, in order.
template <typename Better>
void keep_best(std::vector<Scored>& best, Scored s, std::size_t k, Better better) {
  if (best.size() == k && !better(s, best.back())) return;
  best.insert(std::upper_bound(best.begin(), best.end(), s, better), s);
  if (best.size() > k) best.pop_back();
}

struct Partial {
  std::vector<Scored> low;
  std::vector<Scored> high;
  std::size_t evaluated = 0;
};

bool injects(const SearchTask& task) { return task.inject_known.value_or(task.dim == 2); }

std::vector<Witness> injected_candidates(const SearchTask& task) {
  std::vector<Witness> out;
  if (!injects(task) || task.dim != 2) return out;
  std::int64_t index = -1;
  for (const Triple& t : known_counterexamples()) {
    out.push_back({t.rho, t.a, t.b, 0.0, index--, false});
  }
  return out;
}

// Runs fn(i) for i in [0, count) over `threads` workers with contiguous
// chunks. Results must not depend on the split.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers == 1) {
    fn(0, 0, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    pool.emplace_back([=, &fn] { fn(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

// Lower is better.
double score(Objective objective, double value, double reference) {
  if (objective != Objective::sign_witnesses_lhs_difference) return value;
  return reference > 0.0 ? -value : value;
}

bool acceptable(Objective objective, double candidate, double reference) {
  if (!std::isfinite(candidate)) return false;
  if (objective != Objective::sign_witnesses_lhs_difference) return true;
  return reference > 0.0 ? candidate > 0.0 : candidate <= 0.0;
}

ComplexMatrix project_to_states(const ComplexMatrix& m) {
  const SpectralDecomposition s = hermitian_eig(hermitian_part(m));
  ComplexMatrix clipped = s.apply([](double l) { return std::max(l, 0.0); });
  clipped = hermitian_part(clipped);
  const double tr = trace(clipped).real();
  if (!(tr > 0.0)) throw Error(ErrorKind::BadSpec, "projection collapsed to zero trace");
  return (1.0 / tr) * clipped;
}

void perturb(ComplexMatrix& m, Rng& rng, double step) {
  const std::size_t n = m.dim();
  const std::size_t i = rng.below(n);
  const std::size_t j = rng.below(n);
  const double delta = step * rng.gaussian();
  if (i == j) {
    m(i, i) += delta;
  } else if (rng.below(2) == 0) {
    m(i, j) += delta;
    m(j, i) += delta;
  } else {
    m(i, j) += Complex(0.0, delta);
    m(j, i) -= Complex(0.0, delta);
  }
}

}  // namespace

std::string_view to_string(Objective objective) {
  switch (objective) {
    case Objective::min_gap_false_cov_variant: return "min_gap_false_cov_variant";
    case Objective::min_gap_re_ordering: return "min_gap_re_ordering";
    case Objective::sign_witnesses_lhs_difference: return "sign_witnesses_lhs_difference";
  }
  return "unknown";
}

std::optional<Objective> parse_objective(std::string_view name) {
  for (Objective o : {Objective::min_gap_false_cov_variant, Objective::min_gap_re_ordering,
                      Objective::sign_witnesses_lhs_difference}) {
    if (to_string(o) == name) return o;
  }
  if (name == "false_cov_variant") return Objective::min_gap_false_cov_variant;
  if (name == "re_ordering" || name == "false_re_ordering") return Objective::min_gap_re_ordering;
  if (name == "sign_witnesses" || name == "lhs_difference") {
    return Objective::sign_witnesses_lhs_difference;
  }
  return std::nullopt;
}

void validate(const SearchTask& task) {
  if (task.samples < 1) throw Error(ErrorKind::BadSpec, "samples must be at least 1");
  if (task.top_k < 1) throw Error(ErrorKind::BadSpec, "top_k must be at least 1");
  if (!(task.observable_scale > 0.0) || !std::isfinite(task.observable_scale)) {
    throw Error(ErrorKind::BadSpec, "observable scale must be positive");
  }
  EnsembleSpec spec = task.state;
  spec.dim = task.dim;
  validate(spec);
}

double evaluate_objective(Objective objective, const ComplexMatrix& rho, const ComplexMatrix& a,
                          const ComplexMatrix& b) {
  const DensityMatrix state(rho);
  const Observable oa(a);
  const Observable ob(b);
  switch (objective) {
    case Objective::min_gap_false_cov_variant:
      return eval_false_cov_variant(state, oa, ob).gap;
    case Objective::min_gap_re_ordering:
      return eval_re_ordering(state, oa, ob).gap;
    case Objective::sign_witnesses_lhs_difference:
      return eval_lhs_difference(state, oa, ob);
  }
  return 0.0;
}

Witness sample_candidate(const SearchTask& task, std::uint64_t sample_index) {
  EnsembleSpec spec = task.state;
  spec.dim = task.dim;
  Rng rng = Rng::for_sample(task.seed, sample_index);
  const DensityMatrix rho = random_density(spec, rng);
  const Observable a = random_observable(task.dim, task.observable_scale, rng);
  const Observable b = random_observable(task.dim, task.observable_scale, rng);
  Witness w{rho.matrix(), a.matrix(), b.matrix(), 0.0, static_cast<std::int64_t>(sample_index), false};
  w.objective_value = evaluate_objective(task.objective, w.rho, w.a, w.b);
  return w;
}

SearchResult run_search(const SearchTask& task) {
  validate(task);
  const bool two_sided = task.objective == Objective::sign_witnesses_lhs_difference;
  const std::size_t k = task.top_k;

  std::vector<Witness> injected = injected_candidates(task);
  Partial merged;
  for (Witness& w : injected) {
    w.objective_value = evaluate_objective(task.objective, w.rho, w.a, w.b);
    keep_best(merged.low, {w.objective_value, w.sample_index}, k, lower_first);
    if (two_sided) keep_best(merged.high, {w.objective_value, w.sample_index}, k, higher_first);
    ++merged.evaluated;
  }

  const unsigned threads = std::max(1u, task.threads);
  std::vector<Partial> partials(std::min<std::size_t>(threads, task.samples));
  parallel_for(task.samples, threads, [&](std::size_t worker, std::size_t begin, std::size_t end) {
    Partial& p = partials[worker];
    for (std::size_t i = begin; i < end; ++i) {
      double value;
      try {
        value = sample_candidate(task, i).objective_value;
      } catch (const Error&) {
        continue;
      }
      if (!std::isfinite(value)) continue;
      const Scored s{value, static_cast<std::int64_t>(i)};
      keep_best(p.low, s, k, lower_first);
      if (two_sided) keep_best(p.high, s, k, higher_first);
      ++p.evaluated;
    }
  });
  for (const Partial& p : partials) {
    for (const Scored& s : p.low) keep_best(merged.low, s, k, lower_first);
    for (const Scored& s : p.high) keep_best(merged.high, s, k, higher_first);
    merged.evaluated += p.evaluated;
  }

  std::vector<Scored> chosen = merged.low;
  for (const Scored& s : merged.high) {
    const bool dup = std::any_of(chosen.begin(), chosen.end(),
                                 [&](const Scored& c) { return c.index == s.index; });
    if (!dup) chosen.push_back(s);
  }

  SearchResult result;
  result.evaluated = merged.evaluated;
  result.witnesses.resize(chosen.size());
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    const std::int64_t index = chosen[c].index;
    result.witnesses[c] = index < 0 ? injected[static_cast<std::size_t>(-index - 1)]
                                    : sample_candidate(task, static_cast<std::uint64_t>(index));
  }

  if (task.refine) {
    parallel_for(result.witnesses.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
      for (std::size_t c = begin; c < end; ++c) {
        Witness& w = result.witnesses[c];
        const auto stream = static_cast<std::uint64_t>(w.sample_index) ^ 0x5bd1e995ULL;
        w = refine_witness(w, task.objective, task.refine_steps, task.seed ^ stream);
      }
    });
  }

  const auto by_value = [&](const Witness& x, const Witness& y) {
    return lower_first({x.objective_value, x.sample_index}, {y.objective_value, y.sample_index});
  };
  if (two_sided) {
    auto mid = std::stable_partition(result.witnesses.begin(), result.witnesses.end(),
                                     [](const Witness& w) { return w.objective_value < 0.0; });
    std::sort(result.witnesses.begin(), mid, by_value);
    std::sort(mid, result.witnesses.end(), [&](const Witness& x, const Witness& y) { return by_value(y, x); });
  } else {
    std::sort(result.witnesses.begin(), result.witnesses.end(), by_value);
  }

  for (const Witness& w : result.witnesses) {
    if (w.objective_value < 0.0) result.found_negative = true;
    if (w.objective_value > 0.0) result.found_positive = true;
  }
  return result;
}

Witness refine_witness(const Witness& w, Objective objective, std::size_t steps, std::uint64_t seed) {
  if (steps == 0) return w;
  Rng rng(seed);
  const double reference = w.objective_value;
  Witness best = w;
  double best_score = score(objective, reference, reference);
  double step = kInitialStep;
  const std::size_t patience = std::max<std::size_t>(1, steps / 5);
  std::size_t stale = 0;
  bool improved = false;

  for (std::size_t s = 0; s < steps; ++s) {
    Witness trial = best;
    const std::uint64_t target = rng.below(3);
    ComplexMatrix& m = target == 0 ? trial.rho : (target == 1 ? trial.a : trial.b);
    perturb(m, rng, step);

    bool accepted = false;
    try {
      if (target == 0) trial.rho = project_to_states(trial.rho);
      const double value = evaluate_objective(objective, trial.rho, trial.a, trial.b);
      const double trial_score = score(objective, value, reference);
      if (acceptable(objective, value, reference) && trial_score < best_score) {
        trial.objective_value = value;
        best = std::move(trial);
        best_score = trial_score;
        accepted = true;
        improved = true;
      }
    } catch (const Error&) {
    }

    if (accepted) {
      stale = 0;
    } else if (++stale >= patience) {
      step = std::max(step / 2.0, kStepFloor);
      stale = 0;
    }
  }
  best.refined = w.refined || improved;
  return best;
}

}  // namespace skewinfo
