#include <cmath>

#include "doctest.h"
#include "skewinfo/counterexamples.hpp"
#include "skewinfo/error.hpp"
#include "skewinfo/io.hpp"
#include "skewinfo/search.hpp"

using namespace skewinfo;

namespace {

Witness from_triple(const Triple& t, Objective objective) {
  Witness w{t.rho, t.a, t.b, 0.0, -1, false};
  w.objective_value = evaluate_objective(objective, t.rho, t.a, t.b);
  return w;
}

}  // namespace

TEST_CASE("objective names parse") {
  CHECK(parse_objective("false_cov_variant") == Objective::min_gap_false_cov_variant);
  CHECK(parse_objective("re_ordering") == Objective::min_gap_re_ordering);
  CHECK(parse_objective("sign_witnesses") == Objective::sign_witnesses_lhs_difference);
  CHECK(parse_objective("min_gap_re_ordering") == Objective::min_gap_re_ordering);
  CHECK_FALSE(parse_objective("bogus").has_value());
}

TEST_CASE("task validation") {
  SearchTask task;
  task.samples = 0;
  CHECK_THROWS_AS(run_search(task), Error);
  task.samples = 1;
  task.dim = 1;
  CHECK_THROWS_AS(run_search(task), Error);
  task.dim = 2;
  task.top_k = 0;
  CHECK_THROWS_AS(run_search(task), Error);
}

TEST_CASE("min-gap search results are sorted, sound and capped at k") {
  SearchTask task;
  task.objective = Objective::min_gap_re_ordering;
  task.dim = 3;
  task.samples = 500;
  task.top_k = 7;
  task.seed = 3;
  const SearchResult r = run_search(task);
  REQUIRE(r.witnesses.size() == 7);
  CHECK(r.evaluated == 500);
  for (std::size_t i = 1; i < r.witnesses.size(); ++i) {
    CHECK(r.witnesses[i - 1].objective_value <= r.witnesses[i].objective_value);
  }
  for (const Witness& w : r.witnesses) {
    CHECK(std::abs(evaluate_objective(task.objective, w.rho, w.a, w.b) - w.objective_value) <= 1e-9);
    CHECK(w.sample_index >= 0);
  }
}

TEST_CASE("dim-2 searches inject the known triples unless told not to") {
  SearchTask task;
  task.objective = Objective::min_gap_false_cov_variant;
  task.samples = 10;
  task.top_k = 20;
  const SearchResult with = run_search(task);
  CHECK(with.evaluated == 12);
  bool found = false;
  for (const Witness& w : with.witnesses) {
    if (w.sample_index == -1) {
      found = true;
      CHECK(std::abs(w.objective_value + 0.75) <= 1e-10);
    }
  }
  CHECK(found);
  CHECK(with.witnesses.front().objective_value <= -0.75 + 1e-10);

  task.inject_known = false;
  const SearchResult without = run_search(task);
  CHECK(without.evaluated == 10);
  for (const Witness& w : without.witnesses) CHECK(w.sample_index >= 0);
}

TEST_CASE("random search finds substantially negative cov-variant gaps") {
  SearchTask task;
  task.objective = Objective::min_gap_false_cov_variant;
  task.samples = 20000;
  task.seed = 42;
  task.inject_known = false;
  task.threads = 4;
  const SearchResult r = run_search(task);
  CHECK(r.witnesses.front().objective_value <= -0.5);
}

TEST_CASE("random search finds negative re-ordering gaps") {
  SearchTask task;
  task.objective = Objective::min_gap_re_ordering;
  task.samples = 20000;
  task.seed = 42;
  task.inject_known = false;
  task.threads = 4;
  CHECK(run_search(task).witnesses.front().objective_value < 0.0);
}

TEST_CASE("sign-witness search reports both signs") {
  SearchTask task;
  task.objective = Objective::sign_witnesses_lhs_difference;
  task.samples = 200;
  task.top_k = 3;
  const SearchResult r = run_search(task);
  CHECK(r.found_negative);
  CHECK(r.found_positive);
  CHECK(r.witnesses.front().objective_value < 0.0);
  CHECK(r.witnesses.back().objective_value > 0.0);
}

TEST_CASE("results do not depend on the worker count") {
  for (Objective objective : {Objective::min_gap_false_cov_variant, Objective::sign_witnesses_lhs_difference}) {
    SearchTask task;
    task.objective = objective;
    task.dim = 3;
    task.samples = 997;
    task.seed = 77;
    task.refine = true;
    task.refine_steps = 50;
    task.threads = 1;
    const std::string serial = io::witness_file(task, run_search(task)).dump();
    for (unsigned threads : {2u, 3u, 8u}) {
      task.threads = threads;
      CHECK(io::witness_file(task, run_search(task)).dump() == serial);
    }
  }
}

TEST_CASE("refine_witness with zero steps is the identity") {
  const Witness w = from_triple(cov_variant_counterexample(), Objective::min_gap_false_cov_variant);
  const Witness r = refine_witness(w, Objective::min_gap_false_cov_variant, 0, 1);
  CHECK(r.rho == w.rho);
  CHECK(r.a == w.a);
  CHECK(r.b == w.b);
  CHECK(r.objective_value == w.objective_value);
  CHECK_FALSE(r.refined);
}

TEST_CASE("refining the cov-variant counterexample never worsens it") {
  const Witness w = from_triple(cov_variant_counterexample(), Objective::min_gap_false_cov_variant);
  REQUIRE(std::abs(w.objective_value + 0.75) <= 1e-10);
  const Witness r = refine_witness(w, Objective::min_gap_false_cov_variant, 400, 9);
  CHECK(r.objective_value <= -0.75);
  CHECK(std::abs(evaluate_objective(Objective::min_gap_false_cov_variant, r.rho, r.a, r.b) -
                 r.objective_value) <= 1e-9);
}

TEST_CASE("refinement is monotone and keeps the sign for sign witnesses") {
  for (const Triple& t : known_counterexamples()) {
    const Witness w = from_triple(t, Objective::sign_witnesses_lhs_difference);
    const Witness r = refine_witness(w, Objective::sign_witnesses_lhs_difference, 300, 4);
    CHECK(std::abs(r.objective_value) >= std::abs(w.objective_value));
    CHECK((r.objective_value > 0.0) == (w.objective_value > 0.0));
    CHECK(std::abs(evaluate_objective(Objective::sign_witnesses_lhs_difference, r.rho, r.a, r.b) -
                   r.objective_value) <= 1e-9);
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SearchTask task;
    task.objective = Objective::min_gap_re_ordering;
    task.dim = 3;
    const Witness w = sample_candidate(task, seed);
    const Witness r1 = refine_witness(w, task.objective, 100, seed);
    const Witness r2 = refine_witness(w, task.objective, 100, seed);
    CHECK(r1.objective_value <= w.objective_value);
    CHECK(r1.objective_value == r2.objective_value);
    CHECK(r1.rho == r2.rho);
  }
}
