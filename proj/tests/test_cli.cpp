#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "skewinfo/cli.hpp"
#include "skewinfo/counterexamples.hpp"
#include "skewinfo/io.hpp"

using namespace skewinfo;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("skewinfo_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string triple_file(const Triple& t) {
  return io::problem_to_json({t.label, t.rho, t.a, t.b}).dump();
}

}  // namespace

TEST_CASE("compute on the cov-variant triple reports U_A = 1/2") {
  TempDir dir;
  const std::string path = dir.write("r2.json", triple_file(cov_variant_counterexample()));
  const Run r = run({"compute", path});
  REQUIRE(r.code == cli::kOk);
  const json doc = json::parse(r.out);
  CHECK(std::abs(doc["U_A"].get<double>() - 0.5) <= 1e-12);
  CHECK(doc["verdicts"].size() == 4);
  CHECK_FALSE(doc.contains("proof_chain"));

  const json full = json::parse(run({"compute", path, "--chain", "--wyd", "0.3"}).out);
  CHECK(full.contains("proof_chain"));
  CHECK(full["wyd"][0]["alpha"].get<double>() == 0.3);
}

TEST_CASE("identity observables give zero variances and tight verdicts") {
  TempDir dir;
  const std::string path = dir.write(
      "id.json", R"({"rho": [[0.3, [0.1, 0.2]], [[0.1, -0.2], 0.7]], "A": [[1, 0], [0, 1]], "B": [[1, 0], [0, 1]]})");
  const Run r = run({"compute", path});
  REQUIRE(r.code == cli::kOk);
  const json doc = json::parse(r.out);
  CHECK(std::abs(doc["V_A"].get<double>()) <= 1e-15);
  CHECK(std::abs(doc["V_B"].get<double>()) <= 1e-15);
  for (const json& v : doc["verdicts"]) {
    CHECK(v["holds"].get<bool>());
    CHECK(std::abs(v["gap"].get<double>()) <= 1e-12);
  }
}

TEST_CASE("malformed JSON exits 1 and names the position") {
  TempDir dir;
  const std::string path = dir.write("bad.json", "{\n  \"rho\": [[1, 0],\n  oops\n}");
  const Run r = run({"compute", path});
  CHECK(r.code == cli::kIoOrParse);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(r.err.find("column") != std::string::npos);

  CHECK(run({"compute", dir.file("missing.json")}).code == cli::kIoOrParse);
}

TEST_CASE("invalid states exit 2 and name the invariant") {
  TempDir dir;
  const std::string trace = dir.write("trace.json", R"({"rho": [[0.5, 0], [0, 0.7]], "A": [[1, 0], [0, 0]], "B": [[0, 1], [1, 0]]})");
  Run r = run({"check", trace});
  CHECK(r.code == cli::kValidation);
  CHECK(r.err.find("BadTrace") != std::string::npos);

  const std::string herm = dir.write("herm.json", R"({"rho": [[0.5, 0.1], [0, 0.5]], "A": [[1, 0], [0, 0]], "B": [[0, 1], [1, 0]]})");
  r = run({"check", herm});
  CHECK(r.code == cli::kValidation);
  CHECK(r.err.find("NotHermitian") != std::string::npos);

  const std::string neg = dir.write("neg.json", R"({"rho": [[1.5, 0], [0, -0.5]], "A": [[1, 0], [0, 0]], "B": [[0, 1], [1, 0]]})");
  r = run({"check", neg});
  CHECK(r.code == cli::kValidation);
  CHECK(r.err.find("NegativeSpectrum") != std::string::npos);

  const std::string dims = dir.write("dims.json", R"({"rho": [[0.5, 0], [0, 0.5]], "A": [[1, 0, 0], [0, 0, 0], [0, 0, 0]], "B": [[0, 1], [1, 0]]})");
  r = run({"check", dims});
  CHECK(r.code == cli::kValidation);
  CHECK(r.err.find("DimMismatch") != std::string::npos);
}

TEST_CASE("check exit codes follow the relation outcomes") {
  TempDir dir;
  const std::string r2 = dir.write("r2.json", triple_file(cov_variant_counterexample()));
  const std::string r3 = dir.write("r3.json", triple_file(re_ordering_counterexample()));

  Run r = run({"check", r2, "--relations", "false_cov_variant", "--json"});
  CHECK(r.code == cli::kRelationFailed);
  const json doc = json::parse(r.out);
  CHECK(std::abs(doc["verdicts"][0]["gap"].get<double>() + 0.75) <= 1e-10);

  r = run({"check", r3, "--relations", "false_re_ordering", "--json"});
  CHECK(r.code == cli::kRelationFailed);
  const double gap = json::parse(r.out)["verdicts"][0]["gap"].get<double>();
  CHECK(std::abs(gap + 0.1539) <= 1e-3 * 0.1539);

  for (const std::string& path : {r2, r3}) {
    CHECK(run({"check", path, "--relations", "schrodinger_wy"}).code == cli::kOk);
    CHECK(run({"check", path}).code == cli::kOk);
    CHECK(run({"check", path, "--relations", "all"}).code == cli::kRelationFailed);
  }
}

TEST_CASE("reproduce all prints four passing rows") {
  const Run r = run({"reproduce", "all"});
  CHECK(r.code == cli::kOk);
  std::size_t rows = 0, passes = 0;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    ++rows;
    if (line.size() >= 4 && line.compare(line.size() - 4, 4, "pass") == 0) ++passes;
  }
  CHECK(rows == 4);
  CHECK(passes == 4);
  CHECK(run({"reproduce", "remark9"}).code == cli::kValidation);
}

TEST_CASE("bad flags exit 2") {
  CHECK(run({}).code == cli::kValidation);
  CHECK(run({"frobnicate"}).code == cli::kValidation);
  CHECK(run({"search", "--objective", "nonsense"}).code == cli::kValidation);
  CHECK(run({"search", "--dim", "1"}).code == cli::kValidation);
  CHECK(run({"search", "--samples", "0"}).code == cli::kValidation);
  CHECK(run({"search", "--state-kind", "thermal"}).code == cli::kValidation);
  CHECK(run({"search", "--samples", "ten"}).code == cli::kValidation);
  TempDir dir;
  const std::string r2 = dir.write("r2.json", triple_file(cov_variant_counterexample()));
  CHECK(run({"check", r2, "--relations", "uncertainty"}).code == cli::kValidation);
  CHECK(run({"compute", r2, "--wyd", "1.5"}).code == cli::kValidation);
}

TEST_CASE("search output is deterministic and consumable by check") {
  TempDir dir;
  const std::vector<std::string> base = {"search", "--objective", "false_cov_variant", "--dim", "2",
                                         "--samples", "2000", "--seed", "5", "--refine",
                                         "--refine-steps", "40", "--top", "4"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
  };
  REQUIRE(run(with({"--out", dir.file("a.json")})).code == cli::kOk);
  REQUIRE(run(with({"--out", dir.file("b.json")})).code == cli::kOk);
  REQUIRE(run(with({"--out", dir.file("c.json"), "--threads", "6"})).code == cli::kOk);
  const std::string a = slurp(dir.file("a.json"));
  CHECK_FALSE(a.empty());
  CHECK(a == slurp(dir.file("b.json")));
  CHECK(a == slurp(dir.file("c.json")));

  const Run single1 = run({"search", "--samples", "1", "--seed", "11"});
  const Run single2 = run({"search", "--samples", "1", "--seed", "11"});
  CHECK(single1.code == cli::kOk);
  CHECK(single1.out == single2.out);
  CHECK(single1.err.find("samples/s") != std::string::npos);

  // The witnesses contain the injected cov-variant triple, so the false relation fails.
  CHECK(run({"check", dir.file("a.json"), "--relations", "false_cov_variant"}).code == cli::kRelationFailed);
  CHECK(run({"check", dir.file("a.json")}).code == cli::kOk);
}

TEST_CASE("sign-witness search reports both signs") {
  const Run r = run({"search", "--objective", "sign_witnesses", "--samples", "500", "--top", "2"});
  REQUIRE(r.code == cli::kOk);
  const json doc = json::parse(r.out);
  CHECK(doc["found_negative"].get<bool>());
  CHECK(doc["found_positive"].get<bool>());
  CHECK(r.err.find("NoWitness") == std::string::npos);
}

TEST_CASE("reports round-trip to bit-identical verdicts") {
  TempDir dir;
  for (const Triple& t : known_counterexamples()) {
    const std::string input = dir.write("in.json", triple_file(t));
    const Run first = run({"compute", input});
    REQUIRE(first.code == cli::kOk);
    const std::string report = dir.write("report.json", first.out);
    const Run second = run({"compute", report});
    REQUIRE(second.code == cli::kOk);
    CHECK(json::parse(first.out)["verdicts"] == json::parse(second.out)["verdicts"]);
    CHECK(run({"check", input, "--relations", "all", "--json"}).out ==
          run({"check", report, "--relations", "all", "--json"}).out);
  }
}
