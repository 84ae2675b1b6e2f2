#pragma once

#include <string>
#include <vector>

namespace skewinfo {

// One published number recomputed from the built-in counterexample triples.
struct ReproductionRow {
  std::string group;  // remark2, remark3, remark4
  std::string quantity;
  double computed = 0.0;
  double published = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool relative = false;  // tolerance applies to rel_error when true
  bool pass = false;
};

// `which` is remark2, remark3, remark4 or all. Throws std::invalid_argument
// for anything else.
std::vector<ReproductionRow> reproduce(const std::string& which);

}  // namespace skewinfo
