#include "skewinfo/counterexamples.hpp"

namespace skewinfo {

Triple cov_variant_counterexample() {
  return {"cov_variant_counterexample",
          ComplexMatrix{{0.25, 0.0}, {0.0, 0.75}},
          ComplexMatrix{{2.0, 1.0}, {1.0, 2.0}},
          ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}};
}

Triple re_ordering_counterexample() {
  return {"re_ordering_counterexample",
          ComplexMatrix{{0.5, 0.4}, {0.4, 0.5}},
          ComplexMatrix{{4.0, 4.0}, {4.0, 1.0}},
          ComplexMatrix{{5.0, -1.0}, {-1.0, 2.0}}};
}

std::vector<Triple> known_counterexamples() {
  return {cov_variant_counterexample(), re_ordering_counterexample()};
}

}  // namespace skewinfo
