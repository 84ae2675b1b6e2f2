#include "skewinfo/io.hpp"

#include <algorithm>
#include <string>

namespace skewinfo::io {
namespace {

Complex entry_from_json(const json& e, const std::string& field) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw FormatError("field '" + field + "': entries must be numbers or [re, im] pairs");
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Problem problem_from_object(const json& obj, std::size_t position) {
  if (!obj.is_object()) throw FormatError("problem " + std::to_string(position) + " is not an object");
  for (const char* key : {"rho", "A", "B"}) {
    if (!obj.contains(key)) {
      throw FormatError("problem " + std::to_string(position) + " is missing field '" + key + "'");
    }
  }
  Problem p;
  p.label = obj.contains("label") && obj["label"].is_string() ? obj["label"].get<std::string>()
                                                              : "problem_" + std::to_string(position);
  p.rho = matrix_from_json(obj["rho"], "rho");
  p.a = matrix_from_json(obj["A"], "A");
  p.b = matrix_from_json(obj["B"], "B");
  return p;
}

}  // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw FormatError("field '" + field + "' must be a non-empty array of rows");
  const std::size_t n = j.size();
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) {
      throw FormatError("field '" + field + "' must be square: row " + std::to_string(r) + " has the wrong length");
    }
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry_from_json(j[r][c], field);
  }
  return m;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    throw FormatError("JSON parse error at line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + e.what());
  }
}

std::vector<Problem> load_problems(const json& doc) {
  std::vector<Problem> out;
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      for (Problem& p : load_problems(doc[i])) out.push_back(std::move(p));
    }
  } else if (doc.is_object() && doc.contains("witnesses")) {
    const json& ws = doc["witnesses"];
    if (!ws.is_array()) throw FormatError("'witnesses' must be an array");
    for (std::size_t i = 0; i < ws.size(); ++i) out.push_back(problem_from_object(ws[i], i));
  } else {
    out.push_back(problem_from_object(doc, 0));
  }
  if (out.empty()) throw FormatError("document contains no problems");
  return out;
}

json problem_to_json(const Problem& p) {
  return json{{"label", p.label}, {"rho", to_json(p.rho)}, {"A", to_json(p.a)}, {"B", to_json(p.b)}};
}

json to_json(const InequalityVerdict& v) {
  return json{{"relation", std::string(to_string(v.relation_id))},
              {"lhs", v.lhs},
              {"rhs", v.rhs},
              {"gap", v.gap},
              {"holds", v.holds}};
}

json to_json(const ProofChainTrace& t) {
  return json{{"t_corr_sq", t.t_corr_sq}, {"t_triangle", t.t_triangle}, {"t_schwarz", t.t_schwarz},
              {"t_ij", t.t_ij},           {"t_ji", t.t_ji},             {"t_uu", t.t_uu}};
}

void append_report(json& doc, const UncertaintyReport& r) {
  doc["mean_A"] = r.mean_a;
  doc["mean_B"] = r.mean_b;
  doc["V_A"] = r.variance_a;
  doc["V_B"] = r.variance_b;
  doc["I_A"] = r.skew_a;
  doc["I_B"] = r.skew_b;
  doc["J_A"] = r.j_a;
  doc["J_B"] = r.j_b;
  doc["U_A"] = r.u_a;
  doc["U_B"] = r.u_b;
  doc["cov"] = to_json(r.covariance);
  doc["corr"] = to_json(r.correlation);
  doc["commutator_avg"] = to_json(r.commutator_average);
}

json report_document(const Problem& p, const UncertaintyReport& r,
                     const std::vector<InequalityVerdict>& verdicts,
                     const std::optional<ProofChainTrace>& chain, const std::vector<WydValue>& wyd) {
  json doc = problem_to_json(p);
  append_report(doc, r);
  json vs = json::array();
  for (const auto& v : verdicts) vs.push_back(to_json(v));
  doc["verdicts"] = std::move(vs);
  if (chain) doc["proof_chain"] = to_json(*chain);
  if (!wyd.empty()) {
    json ws = json::array();
    for (const auto& w : wyd) ws.push_back(json{{"alpha", w.alpha}, {"I_A", w.skew_a}, {"I_B", w.skew_b}});
    doc["wyd"] = std::move(ws);
  }
  return doc;
}

json witness_file(const SearchTask& task, const SearchResult& result) {
  json ws = json::array();
  for (const Witness& w : result.witnesses) {
    const std::string label = w.sample_index < 0 ? "known_" + std::to_string(-w.sample_index)
                                                 : "sample_" + std::to_string(w.sample_index);
    ws.push_back(json{{"label", label},
                      {"rho", to_json(w.rho)},
                      {"A", to_json(w.a)},
                      {"B", to_json(w.b)},
                      {"objective_value", w.objective_value},
                      {"sample_index", w.sample_index},
                      {"refined", w.refined}});
  }
  json doc{{"objective", std::string(to_string(task.objective))},
           {"dim", task.dim},
           {"samples", task.samples},
           {"seed", task.seed},
           {"state_kind", std::string(to_string(task.state.kind))},
           {"observable_scale", task.observable_scale},
           {"refine", task.refine},
           {"evaluated", result.evaluated},
           {"witnesses", std::move(ws)}};
  if (task.objective == Objective::sign_witnesses_lhs_difference) {
    doc["found_negative"] = result.found_negative;
    doc["found_positive"] = result.found_positive;
  }
  return doc;
}

}  // namespace skewinfo::io
