#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef NCOMM_CLI_PATH
#error "NCOMM_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
  int code;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  std::string out_path = "/tmp/ncomm_cli_out.txt";
  std::string cmd = std::string(NCOMM_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  int raw = std::system(cmd.c_str());
  int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return {code, slurp(out_path)};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("validate accepts a good file and rejects a bad one", "[cli]") {
  write_file("/tmp/ncomm_good.ring",
             "name gf2\ndim 1\nmodulus 2\nlabels e1\nunity 1\nproducts\n1 1 -> 1:1\n");
  RunResult good = run_cli("validate /tmp/ncomm_good.ring");
  REQUIRE(good.code == 0);
  REQUIRE(good.out.find("ok: gf2") != std::string::npos);

  write_file("/tmp/ncomm_bad.ring",
             "dim 2\nmodulus 0\nproducts\n1 1 -> 2:1\n1 2 -> 1:1\n2 1 -> 2:1\n2 2 -> 1:1\n");
  RunResult bad = run_cli("validate /tmp/ncomm_bad.ring");
  REQUIRE(bad.code == 2);
  REQUIRE(bad.out.find("non-associative") != std::string::npos);
  REQUIRE(bad.out.find("(1, 1, 1)") != std::string::npos);

  REQUIRE(run_cli("validate /tmp/no_such_file.ring").code == 2);
}

TEST_CASE("compute prints the bracket from the worked example", "[cli]") {
  RunResult r = run_cli(
      "compute --ring builtin:matrix2x2scale2 --op bracket --n 2 --elems 2e12,2e22");
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "2*2e12\n");  // the element 4e12 in the 2e_ij basis

  RunResult c = run_cli("compute --ring builtin:m2_gf2 --op center");
  REQUIRE(c.code == 0);
  REQUIRE(c.out.find("rank 1") != std::string::npos);
  REQUIRE(c.out.find("e11 + e22") != std::string::npos);

  RunResult p = run_cli("compute --ring builtin:su4_gf2 --op power --n 4");
  REQUIRE(p.code == 0);
  REQUIRE(p.out.find("rank 0") != std::string::npos);

  REQUIRE(run_cli("compute --ring builtin:m2_gf2 --op bracket --elems nosuch").code == 2);
  REQUIRE(run_cli("compute --ring builtin:m2_gf2 --op wat --elems e11").code == 2);
}

TEST_CASE("check exit codes and json output", "[cli]") {
  REQUIRE(run_cli("check thm2_1").code == 0);
  REQUIRE(run_cli("check nonexistent").code == 2);

  RunResult r = run_cli("check example1 --json /tmp/ncomm_report.json");
  REQUIRE(r.code == 0);
  auto parsed = nlohmann::json::parse(slurp("/tmp/ncomm_report.json"));
  REQUIRE(parsed["format"] == 1);
  REQUIRE(parsed["scenarios"][0]["name"] == "example1");
  REQUIRE(parsed["scenarios"][0]["status"] == "pass");
}

TEST_CASE("same invocation twice is byte-identical", "[cli]") {
  std::string cmd = "compute --ring builtin:m2_gf3 --op ideal --elems e12";
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  REQUIRE(a.code == 0);
  REQUIRE(a.out == b.out);

  RunResult f1 = run_cli("fuzz --seed 5 --iters 40");
  RunResult f2 = run_cli("fuzz --seed 5 --iters 40");
  REQUIRE(f1.code == 0);
  REQUIRE(f1.out == f2.out);
}

TEST_CASE("fuzz requires an explicit seed", "[cli]") {
  REQUIRE(run_cli("fuzz --iters 10").code == 2);
}
