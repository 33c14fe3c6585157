#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "semifield/gf.hpp"
#include "semifield/io.hpp"
#include "semifield/vecfn.hpp"

using namespace semifield;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_tool(const std::string& args) {
  std::string cmd = std::string(SFTOOL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp_path(const std::string& name) {
  return "/tmp/sftool_test_" + std::to_string(getpid()) + "_" + name;
}

}  // namespace

TEST_CASE("function table round trip") {
  Field F(3, 3);
  VecFn f = monomial_fn(F, 2);
  std::stringstream ss;
  write_function_table(ss, f);
  VecFn g = read_function_table(ss);
  CHECK(g.p == 3);
  CHECK(g.dim == 3);
  CHECK(g.table == f.table);
}

TEST_CASE("function table rejects malformed input") {
  {
    std::stringstream ss("FNP 1 p=3 n=2\n");
    CHECK_THROWS_AS(read_function_table(ss), std::runtime_error);
  }
  {
    std::stringstream ss("PFN 2 p=3 n=2\n");
    CHECK_THROWS_AS(read_function_table(ss), std::runtime_error);
  }
  {
    std::stringstream ss("PFN 1 p=3 n=2\n0\n1\n");  // truncated
    CHECK_THROWS_AS(read_function_table(ss), std::runtime_error);
  }
  {
    std::stringstream ss;
    ss << "PFN 1 p=3 n=1\n0\n9\n1\n";  // 9 out of range
    CHECK_THROWS_AS(read_function_table(ss), std::runtime_error);
  }
}

TEST_CASE("report json carries the schema fields") {
  InvariantReport rep;
  rep.family = "two-param";
  rep.p = 3;
  rep.dim = 6;
  rep.params = {{"k", 1}, {"r", 0}};
  rep.modulus = {1, 0, 2, 1};
  rep.planar = true;
  auto j = report_to_json(rep);
  CHECK(j["family"] == "two-param");
  CHECK(j["parameters"]["p"] == 3);
  CHECK(j["parameters"]["k"] == 1);
  CHECK(j["verdicts"]["planar"] == true);
  CHECK(j["verdicts"]["apn"].is_null());
  CHECK(j["tool"]["name"] == "sftool");
}

TEST_CASE("cli: field summary and usage errors") {
  CHECK(run_tool("field --p 3 --m 3").exit_code == 0);
  CHECK(run_tool("field --p 4 --m 1").exit_code == 2);   // non-prime
  CHECK(run_tool("field --p 3").exit_code == 2);         // missing --m
  CHECK(run_tool("field --p 2 --m 4 --modulus 1,1,0,0,1").exit_code == 0);
  CHECK(run_tool("field --p 2 --m 4 --modulus 1,0,0,0,1").exit_code == 2);  // reducible
}

TEST_CASE("cli: verify exit codes encode the verdict") {
  CHECK(run_tool("verify --planar --family two-param --p 3 --m 3 --k 1 --r 1").exit_code == 0);
  CHECK(run_tool("verify --planar --family two-param --p 3 --m 3 --k 1 --r 0").exit_code == 0);

  // x^3 over F_27 is not planar: write its table and verify from the file
  Field F(3, 3);
  std::string path = tmp_path("cube.tbl");
  write_function_table(path, monomial_fn(F, 3));
  CHECK(run_tool("verify --planar --in " + path).exit_code == 1);
  std::remove(path.c_str());

  CHECK(run_tool("verify --planar --apn --family weng1").exit_code == 2);  // both flags
}

TEST_CASE("cli: construct then verify round trips the verdict") {
  std::string path = tmp_path("tp.tbl");
  CHECK(run_tool("construct --family two-param --p 3 --m 3 --k 1 --r 1 --out " + path)
            .exit_code == 0);
  CHECK(run_tool("verify --planar --in " + path).exit_code == 0);
  // same verdict computed in memory
  CHECK(run_tool("verify --planar --family two-param --p 3 --m 3 --k 1 --r 1").exit_code == 0);
  std::remove(path.c_str());
}

TEST_CASE("cli: enumerate prints the counting results") {
  RunResult r = run_tool("enumerate --p 3 --m 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("semifield classes (formula): 6") != std::string::npos);
  CHECK(r.out.find("planar classes (formula): 8") != std::string::npos);

  RunResult mism = run_tool("enumerate --p 3 --m 6");
  CHECK(mism.exit_code == 0);  // mismatch is reported, not an error
  CHECK(mism.out.find("differs from the formula") != std::string::npos);
}

TEST_CASE("cli: gamma rank of a table file") {
  Field F(2, 4, {1, 1, 0, 0, 1});
  std::string path = tmp_path("gold.tbl");
  write_function_table(path, monomial_fn(F, 3));
  RunResult r = run_tool("gamma-rank --in " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "100\n");
  std::remove(path.c_str());
}

TEST_CASE("cli: reports are byte-identical across runs") {
  RunResult a = run_tool("report --family two-param --p 3 --m 3 --k 1 --r 0");
  RunResult b = run_tool("report --family two-param --p 3 --m 3 --k 1 --r 0");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"middle\": 9") != std::string::npos);
}

TEST_CASE("cli: axiom verification") {
  CHECK(run_tool("verify --axioms --family two-param --p 3 --m 3 --k 1 --r 1").exit_code == 0);
  CHECK(run_tool("verify --axioms --family dickson --p 3 --m 3 --r 1").exit_code == 0);
  RunResult r = run_tool("verify --axioms --family field --p 3 --m 2 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"unit\": 1") != std::string::npos);
}

TEST_CASE("cli: nuclei verdicts for the dickson family") {
  RunResult r = run_tool("nuclei --family dickson --p 3 --m 3 --r 1 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"middle\": 27") != std::string::npos);
  CHECK(r.out.find("\"nucleus\": 3") != std::string::npos);
}
