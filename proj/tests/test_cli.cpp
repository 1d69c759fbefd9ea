#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "adicert/runner.hpp"

using namespace adicert;

namespace {

std::string env_or_fail(const char* name) {
  const char* v = std::getenv(name);
  REQUIRE_MESSAGE(v != nullptr, name);
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE_MESSAGE(f.good(), path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

int run_cli(const std::string& args) {
  std::string cmd = env_or_fail("ADICERT_BIN") + " " + args + " > /dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WEXITSTATUS(st);
}

std::string gallery_file(const std::string& name) {
  return env_or_fail("ADICERT_GALLERY_DIR") + "/" + name + ".scenario";
}

} // namespace

TEST_CASE("cli: minimal scenario parses to an empty task list") {
  auto sc = parse_scenario("ring R = integers\n", "mini");
  CHECK(sc.declaration_count == 1);
  CHECK(sc.tasks.empty());
  CHECK(sc.rings.count("R") == 1);
}

TEST_CASE("cli: unknown task names the token with its position") {
  try {
    parse_scenario("ring Z = integers\ntask frobnicate Z\n", "bad");
    FAIL("expected a parse error");
  } catch (const ScenarioError& e) {
    CHECK(std::string(e.what()).find("frobnicate") != std::string::npos);
    CHECK(e.line == 2);
    CHECK(e.col == 6);
  }
}

TEST_CASE("cli: type mismatch and unknown identifier diagnostics") {
  std::string prefix = "ring Z = integers\nideal I = ideal(Z, [2])\n";
  CHECK_THROWS_AS(parse_scenario(prefix + "task profile I I\n", "t"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(prefix + "task profile M I\n", "t"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(prefix + "module M = coker(Z, 1, [[2, 3]])\n", "t"),
                  ScenarioError);
  CHECK_THROWS_AS(parse_scenario(prefix + "ideal I = ideal(Z, [2])\n", "t"), ScenarioError);
  try {
    parse_scenario("ring Z = integers\nideal I = ideal(Z, [2)\n", "t");
    FAIL("expected a parse error");
  } catch (const ScenarioError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 22); // the unexpected ')'
  }
}

TEST_CASE("cli: parser is total on malformed input") {
  const char* inputs[] = {
      "", "\n\n#only comments\n", "ring", "ring R", "ring R =", "ring R = poly(",
      "module M = coker(", "task", "= = =", "ring R = integers extra",
      "ring R = poly(XX, [x])", "task profile", "ring R = integers\nring R = integers",
      "ideal I = ideal(R, [2])", "]] [[", "ring R = quotient(R, [1])"};
  for (const char* s : inputs) {
    try {
      parse_scenario(s, "fuzz");
    } catch (const ScenarioError&) {
      // a positioned diagnostic is the accepted outcome
    }
  }
  CHECK(true);
}

TEST_CASE("cli: ring element expressions") {
  auto P = Ring::poly(CoeffDomain::rational(), {"x", "y"});
  CHECK(parse_ring_element(P, "3x - 1") == P->from_int(3) * P->var(0) - P->one());
  CHECK(parse_ring_element(P, "x^2*y + (y - x)y") ==
        P->var(0).pow(2) * P->var(1) + (P->var(1) - P->var(0)) * P->var(1));
  CHECK_THROWS_AS(parse_ring_element(P, "x + z"), ScenarioError);
  CHECK_THROWS_AS(parse_ring_element(P, "x +"), ScenarioError);
}

TEST_CASE("cli: gallery Z-at-2 parses to 4 declarations and 5 tasks") {
  auto sc = parse_scenario(read_file(gallery_file("Z-at-2")), "Z-at-2");
  CHECK(sc.declaration_count == 4);
  CHECK(sc.tasks.size() == 5);
  CHECK(sc.tasks[0].kind == "profile");
  CHECK(sc.tasks[0].mods.size() == 1); // inline free(Z, 1)
  CHECK(sc.tasks[0].depth == 6);
}

TEST_CASE("cli: golden JSON for Z-at-2 matches byte-for-byte") {
  std::string out = "cli_golden_check.json";
  int rc = run_cli("--gallery Z-at-2 --gallery-dir " + env_or_fail("ADICERT_GALLERY_DIR") +
                   " --format json --out " + out);
  CHECK(rc == 0);
  CHECK(read_file(out) == read_file(env_or_fail("ADICERT_GOLDEN_DIR") + "/Z-at-2.json"));
}

TEST_CASE("cli: two runs are byte-identical and emit-then-parse keeps verdicts") {
  std::string dir = env_or_fail("ADICERT_GALLERY_DIR");
  CHECK(run_cli("--gallery basechange-pos --gallery-dir " + dir +
                " --format json --out cli_det_a.json") == 0);
  CHECK(run_cli("--gallery basechange-pos --gallery-dir " + dir +
                " --format json --out cli_det_b.json") == 0);
  std::string a = read_file("cli_det_a.json");
  CHECK(a == read_file("cli_det_b.json"));

  Json parsed = Json::parse(a);
  CHECK(parsed["schema_version"] == kSchemaVersion);
  CHECK(parsed.dump(2) + "\n" == a); // round trip is the identity
  const auto& conds = parsed["tasks"][0]["result"]["conditions"];
  CHECK(conds.size() == 5);
  for (const auto& c : conds) CHECK(c["verdict"]["kind"] == "holds");
}

TEST_CASE("cli: discrepancy surfaces in both output formats") {
  std::string dir = env_or_fail("ADICERT_GALLERY_DIR");
  CHECK(run_cli("--gallery basechange-gap --gallery-dir " + dir +
                " --format json --out cli_gap.json") == 0);
  Json parsed = Json::parse(read_file("cli_gap.json"));
  CHECK(parsed["tasks"][0]["result"]["discrepancy"] == true);
  CHECK(run_cli("--gallery basechange-gap --gallery-dir " + dir +
                " --format text --out cli_gap.txt") == 0);
  CHECK(read_file("cli_gap.txt").find("discrepancy") != std::string::npos);
  CHECK(read_file("cli_gap.txt").find("true") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  std::string dir = env_or_fail("ADICERT_GALLERY_DIR");
  CHECK(run_cli("--gallery Z-at-2 --gallery-dir " + dir) == 0);
  CHECK(run_cli("--gallery Z-at-2 --gallery-dir " + dir + " --strict") == 2);
  CHECK(run_cli("--gallery no-such-scenario --gallery-dir " + dir) == 1);
  CHECK(run_cli("--scenario /nonexistent/file.scenario") == 1);
}

TEST_CASE("cli: depth override reaches every task") {
  auto sc = parse_scenario(read_file(gallery_file("basechange-pos")), "basechange-pos");
  RunOptions opt;
  opt.depth_override = 3;
  auto out = run_scenario(sc, opt);
  CHECK(out.exit_code == 0);
  for (const auto& t : out.report["tasks"]) CHECK(t["depth"] == 3);
}

TEST_CASE("cli: task errors are captured per task, strict aborts") {
  std::string text = "ring P = poly(QQ, [x])\nring S = poly(QQ, [x, y])\n"
                     "ideal I = ideal(P, [x])\nideal J = ideal(S, [y])\n"
                     "map f = ringmap(P -> S, [x])\n"
                     "task base_change f I J depth=3\n"
                     "task wpr P [x] depth=3\n";
  auto sc = parse_scenario(text, "err");
  auto out = run_scenario(sc, RunOptions{});
  CHECK(out.exit_code == 1);
  CHECK(out.report["tasks"].size() == 2);
  CHECK(out.report["tasks"][0]["status"] == "error");
  CHECK(out.report["tasks"][1]["status"] == "ok");
  RunOptions strict;
  strict.strict = true;
  auto out2 = run_scenario(sc, strict);
  CHECK(out2.exit_code == 1);
  CHECK(out2.report["tasks"].size() == 1); // aborted after the failing task
}
