#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "mtc/theories.hpp"
#include "report.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"mtc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = mtc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/mtc_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
  void write(const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
  }
  std::string read() const {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
  }
};

}  // namespace

TEST_CASE("validate subcommand") {
  const auto r = run_cli({"validate", "builtin:ising"});
  CHECK(r.code == 0);
  // eight rows plus header and title
  std::size_t pass_count = 0;
  std::istringstream is(r.out);
  std::string line;
  while (std::getline(is, line))
    if (line.find("pass") != std::string::npos && line.find("check") == std::string::npos)
      ++pass_count;
  CHECK(pass_count == 8);
}

TEST_CASE("validate of a perturbed file exits 2 and still prints the report") {
  auto md = mtc::builtin_ising();
  md.s(0, 0) += 1e-3;
  TempFile file("perturbed.json");
  file.write(mtc::serialize_theory(md));
  const auto r = run_cli({"validate", file.path});
  CHECK(r.code == 2);
  CHECK(r.out.find("unitarity") != std::string::npos);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("fuse subcommand emits the Ising ring") {
  const auto r = run_cli({"fuse", "builtin:ising"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sigma") != std::string::npos);
}

TEST_CASE("orbifold-z2 writes a 9-label theory that re-validates") {
  TempFile file("orb.json");
  const auto r = run_cli({"orbifold-z2", "builtin:su2?k=1", "-o", file.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("16") != std::string::npos);  // mu = 16
  const auto r2 = run_cli({"validate", file.path});
  CHECK(r2.code == 0);
  const auto md = mtc::parse_theory(file.read());
  CHECK(md.rank() == 9);
}

TEST_CASE("spectrum subcommand") {
  const auto r = run_cli({"spectrum", "builtin:su2?k=1", "--n", "3", "--group", "full"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sectors: 24") != std::string::npos);
  CHECK(r.out.find("288") != std::string::npos);

  const auto rj = run_cli({"spectrum", "builtin:su2?k=1", "--n", "2", "--json"});
  CHECK(rj.code == 0);
  CHECK(rj.out.find("\"stabilizer_order\"") != std::string::npos);
  CHECK(rj.out.find("\"dim_sq_sum\"") != std::string::npos);
}

TEST_CASE("spectrum guard produces a usage error without --force") {
  const auto r = run_cli({"spectrum", "builtin:trivial", "--n", "7", "--group", "full"});
  CHECK(r.code == 1);
  const auto forced =
      run_cli({"spectrum", "builtin:trivial", "--n", "7", "--group", "full", "--force"});
  CHECK(forced.code == 0);
  CHECK(forced.err.find("warning") != std::string::npos);
}

TEST_CASE("integrality subcommand") {
  const auto r = run_cli({"integrality", "builtin:ising"});
  CHECK(r.code == 0);
  const auto rj = run_cli({"integrality", "builtin:su2?k=2", "--json"});
  CHECK(rj.code == 0);
  CHECK(rj.out.find("\"non_negative\": true") != std::string::npos);
}

TEST_CASE("genus-blocks subcommand") {
  const auto r =
      run_cli({"genus-blocks", "builtin:ising", "--genus", "1", "--insertions", "1,psi,sigma"});
  CHECK(r.code == 0);
  const auto r0 = run_cli({"genus-blocks", "builtin:ising", "--genus", "1"});
  CHECK(r0.code == 0);
  CHECK(r0.out.find("3") != std::string::npos);
  const auto rj = run_cli({"genus-blocks", "builtin:su2?k=2", "--genus", "0", "--insertions",
                           "0,0", "--json"});
  CHECK(rj.code == 0);
  CHECK(rj.out.find("\"blocks\": 1") != std::string::npos);
}

TEST_CASE("fixedpoint example preset") {
  const auto r = run_cli({"fixedpoint", "--example", "h8", "--level", "3"});
  CHECK(r.code == 0);
  // k1 = 3 odd: counts (1, 2, 2, 1)
  std::istringstream is(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(is, line)) rows.push_back(line);
  REQUIRE(rows.size() >= 6);
  CHECK(rows[2].find("0") != std::string::npos);
  CHECK(rows[2].find("1") != std::string::npos);
  CHECK(rows[3].find("2") != std::string::npos);
}

TEST_CASE("fixedpoint without input is a usage error") {
  const auto r = run_cli({"fixedpoint"});
  CHECK(r.code == 1);
}

TEST_CASE("chartable subcommand") {
  const auto r = run_cli({"chartable", "sym:3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim 2") != std::string::npos);
  const auto rq = run_cli({"chartable", "quaternion"});
  CHECK(rq.code == 0);
}

TEST_CASE("unknown subcommand and flags exit 1") {
  CHECK(run_cli({"frobnicate", "builtin:ising"}).code == 1);
  CHECK(run_cli({"validate", "builtin:ising", "--bogus"}).code == 1);
  CHECK(run_cli({"validate"}).code == 1);
}

TEST_CASE("help exits 0 and lists the subcommands") {
  const auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  for (const char* cmd : {"validate", "fuse", "orbifold-z2", "spectrum", "integrality",
                          "genus-blocks", "fixedpoint", "chartable"})
    CHECK(r.out.find(cmd) != std::string::npos);
}

TEST_CASE("byte-identical output across runs") {
  const auto a = run_cli({"chartable", "sym:4", "--seed", "5"});
  const auto b = run_cli({"chartable", "sym:4", "--seed", "5"});
  CHECK(a.out == b.out);
  const auto c = run_cli({"integrality", "builtin:su2?k=3", "--json"});
  const auto d = run_cli({"integrality", "builtin:su2?k=3", "--json"});
  CHECK(c.out == d.out);
}

TEST_CASE("render_report shapes") {
  mtc::cli::ReportDoc doc;
  doc.title = "t";
  doc.columns = {"a", "b"};
  SUBCASE("empty report renders header only") {
    const std::string text = mtc::cli::render_report(doc, mtc::cli::RenderMode::text);
    CHECK(text == "t\na  b\n");
  }
  SUBCASE("json mode round-trips") {
    doc.add_row({std::string("x"), std::int64_t{3}});
    const std::string js = mtc::cli::render_report(doc, mtc::cli::RenderMode::json);
    CHECK(js.find("\"columns\"") != std::string::npos);
    CHECK(js.find("\"rows\"") != std::string::npos);
    // identical input, identical bytes
    CHECK(js == mtc::cli::render_report(doc, mtc::cli::RenderMode::json));
  }
}
