#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "skewinfo/quantities.hpp"
#include "skewinfo/relations.hpp"
#include "skewinfo/search.hpp"

namespace skewinfo::io {

using nlohmann::json;

// Malformed documents: bad JSON, missing fields, wrong shapes. Distinct from
// skewinfo::Error, which reports a violated mathematical invariant.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrices are row-major nested arrays; each entry is [re, im] or a bare real.
json to_json(const ComplexMatrix& m);
json to_json(Complex z);
ComplexMatrix matrix_from_json(const json& j, const std::string& field);

struct Problem {
  std::string label;
  ComplexMatrix rho;
  ComplexMatrix a;
  ComplexMatrix b;
};

// Accepts a single problem object ({rho, A, B, label?}), a report (same
// keys), a witness file ({witnesses: [...]}) or an array of any of these.
std::vector<Problem> load_problems(const json& doc);

// Parses text and rethrows syntax errors as FormatError naming line and column.
json parse_document(const std::string& text);

json problem_to_json(const Problem& p);
json to_json(const InequalityVerdict& v);
json to_json(const ProofChainTrace& t);
void append_report(json& doc, const UncertaintyReport& r);

struct WydValue {
  double alpha;
  double skew_a;
  double skew_b;
};

json report_document(const Problem& p, const UncertaintyReport& r,
                     const std::vector<InequalityVerdict>& verdicts,
                     const std::optional<ProofChainTrace>& chain, const std::vector<WydValue>& wyd);

json witness_file(const SearchTask& task, const SearchResult& result);

}  // namespace skewinfo::io
