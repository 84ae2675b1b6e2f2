#include "skewinfo/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skewinfo/error.hpp"
#include "skewinfo/io.hpp"
#include "skewinfo/relations.hpp"
#include "skewinfo/reproduce.hpp"
#include "skewinfo/search.hpp"

namespace skewinfo::cli {
namespace {

using io::json;

// Thrown for problems the user can fix by changing flags.
struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Evaluated {
  io::Problem problem;
  DensityMatrix rho;
  Observable a;
  Observable b;
  UncertaintyReport report;
};

std::vector<Evaluated> evaluate_file(const std::string& path) {
  const json doc = io::parse_document(read_file(path));
  std::vector<Evaluated> out;
  for (io::Problem& p : io::load_problems(doc)) {
    DensityMatrix rho(p.rho);
    Observable a(p.a);
    Observable b(p.b);
    require_same_dim(rho.matrix(), a.matrix());
    require_same_dim(a.matrix(), b.matrix());
    UncertaintyReport r = full_report(rho, a, b);
    out.push_back({std::move(p), std::move(rho), std::move(a), std::move(b), r});
  }
  return out;
}

std::vector<RelationId> parse_relations(const std::vector<std::string>& names) {
  if (names.empty()) return {std::begin(kTheorems), std::end(kTheorems)};
  std::vector<RelationId> ids;
  for (const std::string& name : names) {
    if (name == "all") {
      ids.assign(std::begin(kAllRelations), std::end(kAllRelations));
      continue;
    }
    const auto id = parse_relation_id(name);
    if (!id) throw FlagError("unknown relation '" + name + "'");
    ids.push_back(*id);
  }
  return ids;
}

int cmd_compute(const std::string& path, bool chain, const std::vector<double>& alphas,
                std::ostream& out) {
  json docs = json::array();
  for (const Evaluated& e : evaluate_file(path)) {
    std::vector<InequalityVerdict> verdicts;
    for (RelationId id : kTheorems) verdicts.push_back(evaluate(id, e.report));
    std::optional<ProofChainTrace> trace;
    if (chain) trace = proof_chain(e.rho, e.a, e.b);
    std::vector<io::WydValue> wyd;
    for (double alpha : alphas) {
      wyd.push_back({alpha, wyd_skew_information(e.rho, e.a, alpha),
                     wyd_skew_information(e.rho, e.b, alpha)});
    }
    docs.push_back(io::report_document(e.problem, e.report, verdicts, trace, wyd));
  }
  out << (docs.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return kOk;
}

int cmd_check(const std::string& path, const std::vector<std::string>& relation_names, bool as_json,
              std::ostream& out) {
  const std::vector<RelationId> ids = parse_relations(relation_names);
  bool all_hold = true;
  json docs = json::array();
  for (const Evaluated& e : evaluate_file(path)) {
    json verdicts = json::array();
    if (!as_json) {
      out << "# " << e.problem.label << '\n';
      out << std::left << std::setw(20) << "relation" << std::setw(26) << "lhs" << std::setw(26)
          << "rhs" << std::setw(26) << "gap" << "holds\n";
    }
    for (RelationId id : ids) {
      const InequalityVerdict v = evaluate(id, e.report);
      all_hold = all_hold && v.holds;
      if (as_json) {
        verdicts.push_back(io::to_json(v));
      } else {
        out << std::left << std::setw(20) << to_string(id) << std::setw(26) << fmt17(v.lhs)
            << std::setw(26) << fmt17(v.rhs) << std::setw(26) << fmt17(v.gap)
            << (v.holds ? "yes" : "NO") << '\n';
      }
    }
    if (as_json) docs.push_back(json{{"label", e.problem.label}, {"verdicts", std::move(verdicts)}});
  }
  if (as_json) out << (docs.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return all_hold ? kOk : kRelationFailed;
}

int cmd_reproduce(const std::string& which, std::ostream& out) {
  std::vector<ReproductionRow> rows;
  try {
    rows = reproduce(which);
  } catch (const std::invalid_argument& e) {
    throw FlagError(e.what());
  }
  bool ok = true;
  out << std::left << std::setw(9) << "group" << std::setw(44) << "quantity" << std::setw(24)
      << "computed" << std::setw(12) << "published" << std::setw(12) << "abs_err" << std::setw(12)
      << "rel_err" << std::setw(16) << "tolerance" << "result\n";
  for (const ReproductionRow& r : rows) {
    std::ostringstream tol;
    tol << std::setprecision(1) << r.tolerance << (r.relative ? " rel" : " abs");
    out << std::left << std::setw(9) << r.group << std::setw(44) << r.quantity << std::setw(24)
        << fmt17(r.computed) << std::setw(12) << r.published;
    out << std::setw(12) << std::setprecision(3) << r.abs_error << std::setw(12) << r.rel_error
        << std::setprecision(6) << std::setw(16) << tol.str() << (r.pass ? "pass" : "FAIL") << '\n';
    ok = ok && r.pass;
  }
  return ok ? kOk : kRelationFailed;
}

int cmd_search(const SearchTask& task, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const SearchResult result = run_search(task);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string text = io::witness_file(task, result).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }

  err << "objective " << to_string(task.objective) << ": " << result.evaluated << " candidates";
  if (!result.witnesses.empty()) err << ", best value " << fmt17(result.witnesses.front().objective_value);
  err << ", " << std::setprecision(4) << (seconds > 0 ? static_cast<double>(task.samples) / seconds : 0.0)
      << " samples/s\n";
  if (task.objective == Objective::sign_witnesses_lhs_difference) {
    if (!result.found_negative) err << to_string(ErrorKind::NoWitness) << ": no negative lhs difference found\n";
    if (!result.found_positive) err << to_string(ErrorKind::NoWitness) << ": no positive lhs difference found\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uncertainty functionals and relations for finite-dimensional quantum states", "skewinfo"};
  app.require_subcommand(1);

  std::string input;
  bool chain = false;
  std::vector<double> alphas;
  auto* compute = app.add_subcommand("compute", "Full uncertainty report for a problem file");
  compute->add_option("input", input, "Problem, report or witness JSON file")->required();
  compute->add_flag("--chain", chain, "Include the proof-chain trace");
  compute->add_option("--wyd", alphas, "Add Wigner-Yanase-Dyson values at these alphas")
      ->check(CLI::Range(0.0, 1.0));

  std::vector<std::string> relations;
  bool as_json = false;
  auto* check = app.add_subcommand("check", "Evaluate selected relations; exit 3 if any fails");
  check->add_option("input", input, "Problem, report or witness JSON file")->required();
  check->add_option("--relations", relations,
                    "Comma-separated relation ids (heisenberg, schrodinger, luo, schrodinger_wy, "
                    "false_cov_variant, false_re_ordering, all)")
      ->delimiter(',');
  check->add_flag("--json", as_json, "Emit verdicts as JSON");

  std::string which = "all";
  auto* repro = app.add_subcommand("reproduce", "Recompute the published counterexample values");
  repro->add_option("which", which, "remark2, remark3, remark4 or all");

  SearchTask task;
  std::string objective_name = "false_cov_variant";
  std::string kind_name = "ginibre_mixed";
  std::string out_path;
  bool no_inject = false;
  std::size_t refine_steps = task.refine_steps;
  auto* search = app.add_subcommand("search", "Seeded counterexample / witness search");
  search->add_option("--objective", objective_name,
                     "false_cov_variant, re_ordering or sign_witnesses");
  search->add_option("--dim", task.dim, "Hilbert space dimension")->check(CLI::Range(2, 512));
  search->add_option("--samples", task.samples, "Number of random candidates");
  search->add_option("--seed", task.seed, "Base seed");
  search->add_flag("--refine", task.refine, "Hill-descend on the returned witnesses");
  search->add_option("--refine-steps", refine_steps, "Steps per refined witness");
  search->add_option("--top", task.top_k, "Witnesses kept per side");
  search->add_option("--out", out_path, "Witness file (default: standard output)");
  search->add_option("--threads", task.threads, "Worker threads")->check(CLI::Range(1, 1024));
  search->add_option("--state-kind", kind_name,
                     "ginibre_mixed, pure, rank_k, diagonal or degenerate_spectrum");
  search->add_option("--rank", task.state.rank, "Rank for rank_k states");
  search->add_option("--blend", task.state.purity_blend, "Weight of the maximally mixed admixture");
  search->add_option("--scale", task.observable_scale, "Observable entry scale");
  search->add_flag("--no-inject", no_inject, "Do not seed dim-2 searches with the known triples");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("skewinfo");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (*compute) return cmd_compute(input, chain, alphas, out);
    if (*check) return cmd_check(input, relations, as_json, out);
    if (*repro) return cmd_reproduce(which, out);
    if (*search) {
      const auto objective = parse_objective(objective_name);
      if (!objective) throw FlagError("unknown objective '" + objective_name + "'");
      const auto kind = parse_ensemble_kind(kind_name);
      if (!kind) throw FlagError("unknown state kind '" + kind_name + "'");
      task.objective = *objective;
      task.state.kind = *kind;
      task.refine_steps = refine_steps;
      if (no_inject) task.inject_known = false;
      return cmd_search(task, out_path, out, err);
    }
  } catch (const FlagError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const Error& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const io::FormatError& e) {
    err << "parse error: " << e.what() << '\n';
    return kIoOrParse;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoOrParse;
  }
  return kOk;
}

}  // namespace skewinfo::cli
