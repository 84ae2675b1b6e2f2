#include "skewinfo/reproduce.hpp"

#include <cmath>
#include <stdexcept>

#include "skewinfo/counterexamples.hpp"
#include "skewinfo/relations.hpp"

namespace skewinfo {
namespace {

UncertaintyReport report_for(const Triple& t) {
  return full_report(DensityMatrix(t.rho), Observable(t.a), Observable(t.b));
}

ReproductionRow make_row(std::string group, std::string quantity, double computed, double published,
                         double tolerance, bool relative) {
  ReproductionRow row{std::move(group), std::move(quantity), computed, published};
  row.abs_error = std::abs(computed - published);
  row.rel_error = row.abs_error / std::abs(published);
  row.tolerance = tolerance;
  row.relative = relative;
  row.pass = (relative ? row.rel_error : row.abs_error) <= tolerance;
  return row;
}

}  // namespace

std::vector<ReproductionRow> reproduce(const std::string& which) {
  const bool all = which == "all";
  if (!all && which != "remark2" && which != "remark3" && which != "remark4") {
    throw std::invalid_argument("unknown reproduction target '" + which + "'");
  }
  const UncertaintyReport cov_case = report_for(cov_variant_counterexample());
  const UncertaintyReport re_case = report_for(re_ordering_counterexample());

  std::vector<ReproductionRow> rows;
  if (all || which == "remark2") {
    // Exact rational value.
    rows.push_back(make_row("remark2", "U(A)U(B) - |Re Cov|^2 - |Tr rho[A,B]|^2/4",
                            evaluate(RelationId::false_cov_variant, cov_case).gap, -0.75, 1e-10, false));
  }
  if (all || which == "remark3") {
    // Published to 4 significant digits.
    rows.push_back(make_row("remark3", "|Re Cov|^2 - |Re Corr|^2",
                            evaluate(RelationId::false_re_ordering, re_case).gap, -0.1539, 1e-3, true));
  }
  if (all || which == "remark4") {
    rows.push_back(make_row("remark4", "lhs difference (cov_variant triple)",
                            eval_lhs_difference(cov_case), -0.232051, 1e-5, true));
    rows.push_back(make_row("remark4", "lhs difference (re_ordering triple)",
                            eval_lhs_difference(re_case), 13.7862, 1e-3, true));
  }
  return rows;
}

}  // namespace skewinfo
