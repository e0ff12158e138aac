#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "fixmodal/decide.hpp"
#include "fixmodal/formula.hpp"
#include "gen.hpp"

#ifndef FIXMODAL_CLI_PATH
#error "FIXMODAL_CLI_PATH must point at the built binary"
#endif

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(FIXMODAL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    output.append(buf.data(), got);
  int status = pclose(pipe);
  return CliResult{WEXITSTATUS(status), output};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("count golden") {
  CliResult r = run_cli("count --system s5cg --n 1 --what formulas");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2^10 = 1024\n");
}

TEST_CASE("prime-check golden") {
  CliResult r = run_cli("prime-check --n 2 --cells \"1,1;1,2\"");
  CHECK(r.exit_code == 1);
  CHECK(r.output == "VIOLATES: Ground on slice 2\n");

  r = run_cli("prime-check --cells \"1,1;2,2;3,3\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "OK: meets the prime conditions\n");
}

TEST_CASE("decide golden with countermodel") {
  CliResult r = run_cli(
      "decide --system s5cg \"(<>N(x1) & <>N(x2)) -> <>(N(x1)&N(x2))\"");
  CHECK(r.exit_code == 1);
  CHECK(r.output ==
        "NOT PROVABLE\n"
        "countermodel world: 1,3\n"
        "countermodel frame: 1,3;3,1\n");

  r = run_cli(
      "decide --system s5cgm \"(<>N(x1) & <>N(x2)) -> <>(N(x1)&N(x2))\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "PROVABLE\n");
}

TEST_CASE("translate goldens") {
  CliResult r = run_cli("translate --ascii \"[]T(x1)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "forall X(Fix(X) -> 'x1' in X)\n");
  r = run_cli("translate \"T(x1)\"");
  CHECK(r.exit_code == 2);
}

TEST_CASE("json envelope") {
  CliResult r = run_cli("sat --json --system s5cgm \"T(x1) & <>N(x1)\"");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["command"] == "sat");
  CHECK(j["inputs"]["formula"] == "T(x1) & <>N(x1)");
  CHECK(j["result"]["valid"] == true);
  CHECK(j["result"]["witness"]["world"] == nlohmann::json::array({1}));
  CHECK(j["result"]["witness"]["frame"] ==
        nlohmann::json::parse("[[1],[3]]"));
}

TEST_CASE("output is byte-deterministic") {
  const char* cmds[] = {
      "normalize --system s5cg \"~(T(x1) & F(x1))\"",
      "count --json --system s5cgm --n 2 --what definable",
      "lab audit --sentence \"tt=True(tt)\" --sentence \"g=TOP\"",
  };
  for (const char* cmd : cmds) {
    CliResult a = run_cli(cmd);
    CliResult b = run_cli(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
  }
}

TEST_CASE("cli verdicts agree with direct library calls") {
  std::vector<std::string> formulas = {
      "T(x1) -> T(x1)",
      "[]T(x1) -> T(x1)",
      "<>T(x1) & <>F(x1) -> <>N(x1)",
      "T(x1) & F(x1)",
      "(<>N(x1) & <>N(x2)) -> <>(N(x1)&N(x2))",
      "[]N(x1)",
  };
  std::mt19937 rng(60221023);
  for (int i = 0; i < 8; ++i)
    formulas.push_back(fixmodal::render(testgen::random_formula(rng, 3, 2)));
  const char* systems[] = {"s5", "s5c", "s5cg", "s5cgm"};
  for (const std::string& text : formulas) {
    for (const char* sys_name : systems) {
      fixmodal::System sys = *fixmodal::parse_system(sys_name);
      CliResult r = run_cli(std::string("decide --system ") + sys_name +
                            " \"" + text + "\"");
      fixmodal::Verdict v = fixmodal::valid(fixmodal::parse(text), sys);
      CHECK(r.exit_code == (v.valid ? 0 : 1));
      CliResult s = run_cli(std::string("sat --system ") + sys_name + " \"" +
                            text + "\"");
      fixmodal::Verdict sv = fixmodal::satisfiable(fixmodal::parse(text), sys);
      CHECK(s.exit_code == (sv.valid ? 0 : 1));
    }
  }
}

TEST_CASE("the serial flag reproduces the parallel output") {
  const char* cmds[] = {
      "decide --system s5cg \"(<>N(x1) & <>N(x2)) -> <>(N(x1)&N(x2))\"",
      "sat --system s5cgm \"T(x1) & <>N(x1)\"",
      "count --system s5cgm --n 2 --what definable",
  };
  for (const char* cmd : cmds) {
    CliResult parallel = run_cli(cmd);
    CliResult serial = run_cli(std::string(cmd) + " --serial");
    CHECK(parallel.exit_code == serial.exit_code);
    CHECK(parallel.output == serial.output);
  }
}

TEST_CASE("realize feeds lab classify end to end") {
  std::string pool_path = "cli_test_pool.json";
  CliResult r = run_cli("realize --cells \"1;3\" --out " + pool_path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("names: gamma") == 0);

  CliResult c = run_cli("lab classify --pool " + pool_path);
  CHECK(c.exit_code == 0);
  CHECK(c.output.find("gamma: profile 1;3") != std::string::npos);
  CHECK(c.output.find("intrinsic=yes") != std::string::npos);
  std::remove(pool_path.c_str());

  CliResult bad = run_cli("realize --cells \"1;2\"");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output == "NOT REALIZABLE: Ground on slice 1\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("decide --system nope \"T(x1)\"").exit_code == 2);
  CHECK(run_cli("decide --system s5 \"T(x1\"").exit_code == 2);
  CHECK(run_cli("count --system s5 --n 1").exit_code == 2);  // missing --what
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("decide --system s5cgm \"N(x1)&N(x2)&N(x3)\"").exit_code == 2);
}

TEST_CASE("the arity-3 flag unlocks the big sweep") {
  CliResult r = run_cli(
      "decide --system s5cgm --allow-n3 "
      "\"(<>N(x1) & <>N(x2) & <>N(x3)) -> <>(N(x1)&N(x2)&N(x3))\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "PROVABLE\n");
}

}  // TEST_SUITE
