#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(HOPFRB_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("list") {
  const Run all = cli("list");
  CHECK(all.code == 0);
  CHECK(contains(all.out, "mat2-rational  algebra\n"));
  const Run weak = cli("list --kind weak-hopf");
  CHECK(weak.code == 0);
  CHECK(weak.out == "weak-two-point  weak-hopf\nweak-pair-groupoid  weak-hopf\n");
  // no bialgebra-kind entries: an empty table
  const Run none = cli("list --kind bialgebra");
  CHECK(none.code == 0);
  CHECK(none.out.empty());
  CHECK(cli("list --kind groupoid").code == 2);
}

TEST_CASE("rb-operator checks") {
  CHECK(cli("check rb-operator --algebra mat2-rational --op proj:E11 --weight -1").code == 0);
  const Run bad = cli("check rb-operator --algebra mat2-rational --op leftmul:E12 --weight -1");
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "witness"));
  CHECK(cli("check rb-operator --algebra mat2-rational --op zero").code == 0);
  CHECK(cli("check rb-operator --algebra mat2-rational --op id").code == 0);
  // -id is Rota-Baxter of weight 1 only
  CHECK(cli("check rb-operator --algebra mat2-rational --op scalar:-1 --weight 1").code == 0);
  CHECK(cli("check rb-operator --algebra mat2-rational --op scalar:-1 --weight 2").code == 1);
}

TEST_CASE("usage and validation errors exit 2") {
  CHECK(cli("check rb-operator --algebra mat2-rational --op proj:E12").code == 2);  // not idempotent
  CHECK(cli("check rb-operator --algebra mat2-rational --op proj:E33").code == 2);
  CHECK(cli("check rb-operator --algebra mat2-rational --op frobnicate").code == 2);
  CHECK(cli("check rb-operator --algebra no-such-entry --op id").code == 2);
  CHECK(cli("check rb-operator --algebra mat2-rational --op id --weight 1/0").code == 2);
  CHECK(cli("check rb-operator --op id").code == 2);
  CHECK(cli("check no-such-check").code == 2);
  CHECK(cli("check hopf --host mat2-rational").code == 2);  // kind mismatch
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("").code == 2);
}

TEST_CASE("instances and constructions") {
  CHECK(cli("check rbp-module --instance doubled-mat2 --weight -1").code == 0);
  CHECK(cli("check rbp-module --instance mat2-proj-e11 --weight 3").code == 1);
  CHECK(cli("check rbp-module --module group-algebra-c2-left-regular --op zero --t-op id --weight -1").code == 0);
  CHECK(cli("check generic --module group-algebra-c2-left-regular --op scalar:2 --trials 10").code == 1);
  CHECK(cli("check atkinson --instance mat2-proj-e11").code == 0);
  CHECK(cli("check doubling --instance mat2-proj-e11").code == 0);
  CHECK(cli("check integral-T --host group-algebra-c3 --trials 5").code == 0);
  CHECK(cli("check dual-action-T --host group-algebra-c2 --functional c2-2delta-e").code == 0);
  CHECK(cli("check dimodule-T --entry c2-triangular-dimodule --functional c2-delta-e").code == 0);
  CHECK(cli("check quasitriangular --entry c2-triangular-R").code == 0);
  CHECK(cli("check doi-hopf-projection --entry weak-pair-groupoid-regular-doi-hopf").code == 0);
  const Run adj = cli("check adjoint --host weak-pair-groupoid");
  CHECK(adj.code == 1);
  CHECK(contains(adj.out, "quantum commutative"));
  CHECK(cli("check integral --host sweedler-h4").code == 1);
}

TEST_CASE("matrix literals and report files") {
  write("cli_test_op.json", R"({"matrix": [["1","0","0","0"],["0","1","0","0"],["0","0","0","0"],["0","0","0","0"]]})");
  CHECK(cli("check rb-operator --algebra mat2-rational --op matrix:@cli_test_op.json --report cli_test_report.json").code == 0);
  const json r = json::parse(slurp("cli_test_report.json"));
  CHECK(r["result"] == "pass");
  CHECK(r["version"] == "0.1.0");
  CHECK(r["seed"] == 7);
  CHECK(r["weight"] == "-1");
  write("cli_test_op.json", R"([["1","0"],["0","1"]])");
  CHECK(cli("check rb-operator --algebra mat2-rational --op matrix:@cli_test_op.json").code == 2);
  std::remove("cli_test_op.json");
  std::remove("cli_test_report.json");
}

TEST_CASE("seed comes from HOPFRB_SEED unless given") {
  CHECK(cli("check rb-operator --algebra mat2-rational --op id --json").out.find("\"seed\": 7") != std::string::npos);
  setenv("HOPFRB_SEED", "11", 1);
  CHECK(contains(cli("check rb-operator --algebra mat2-rational --op id --json").out, "\"seed\": 11"));
  CHECK(contains(cli("check rb-operator --algebra mat2-rational --op id --json --seed 3").out, "\"seed\": 3"));
  setenv("HOPFRB_SEED", "eleven", 1);
  CHECK(cli("list").code == 2);
  unsetenv("HOPFRB_SEED");
}

TEST_CASE("prime-field files") {
  const Run dump = cli("dump group-algebra-c2");
  REQUIRE(dump.code == 0);
  json h = json::parse(dump.out);
  h["field"] = {{"kind", "prime"}, {"p", 3}};
  write("cli_test_f3.json", json::array({h}).dump());
  const Run ok = cli("check hopf --host group-algebra-c2 --load cli_test_f3.json");
  CHECK(ok.code == 0);
  // over F_2 the normalized integral 1/2 (1+g) does not exist
  h["field"]["p"] = 2;
  write("cli_test_f3.json", json::array({h}).dump());
  CHECK(cli("check integral --host group-algebra-c2 --load cli_test_f3.json").code == 1);
  CHECK(cli("list --load cli_test_f3.json").out == "group-algebra-c2  hopf\n");
  std::remove("cli_test_f3.json");
}

TEST_CASE("replay") {
  const Run one = cli("replay thm-3.2 --trials 100 --seed 7");
  CHECK(one.code == 0);
  CHECK(contains(one.out, "thm-3.2  pass"));
  const Run bad = cli("replay prop-9.9");
  CHECK(bad.code == 2);
  CHECK(contains(bad.out, "unknown theorem id"));
  CHECK(cli("replay thm-3.5 --trials -1").code == 2);
  const Run a = cli("replay prop-4.1 --trials 20 --seed 5 --json");
  const Run b = cli("replay prop-4.1 --trials 20 --seed 5 --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != cli("replay prop-4.1 --trials 20 --seed 6 --json").out);
}
