#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "spinclass/report.hpp"

using namespace spinclass::report;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(SPINCLASS_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, got);
  const int raw = pclose(pipe.release());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool every_step_cited(const Report& r) {
  for (const auto& s : r.steps)
    if (s.citation.empty()) return false;
  return true;
}

}  // namespace

TEST_CASE("clifford command") {
  auto r3 = cmd_clifford(3);
  CHECK(r3.verdict());
  CHECK(r3.steps.front().witness["count"] == 2);
  CHECK(r3.steps.front().witness["field"] == "quaternionic");
  auto r1 = cmd_clifford(1);
  CHECK(r1.verdict());
  CHECK(r1.steps.front().witness["count"] == 1);
  CHECK_THROWS_AS(cmd_clifford(0), UsageError);
  CHECK_THROWS_AS(cmd_clifford(13), UsageError);
  CHECK(cmd_clifford(11).verdict());
}

TEST_CASE("stabilizer command") {
  auto r = cmd_stabilizer("1,2,6");
  CHECK(r.verdict());
  CHECK(r.steps[1].witness["pattern"] == "Spin3");
  CHECK(r.steps[0].witness["real_dimension"] == 4);
  CHECK(cmd_stabilizer("1").steps[0].witness["real_dimension"] == 16);
  CHECK(cmd_stabilizer(" 6, 2,1").inputs["indices"] == "{1,2,6}");
  CHECK_THROWS_AS(cmd_stabilizer("7"), UsageError);
  CHECK_THROWS_AS(cmd_stabilizer("1,1"), UsageError);
  CHECK_THROWS_AS(cmd_stabilizer("a"), UsageError);
  CHECK_THROWS_AS(cmd_stabilizer(""), UsageError);
  auto odd = cmd_stabilizer("2,3");
  CHECK(odd.verdict());
  CHECK(odd.steps[1].witness["pattern"].is_null());
}

TEST_CASE("lemma-cohomo command") {
  auto r4 = cmd_lemma_cohomo(4);
  CHECK(r4.verdict());
  CHECK(r4.steps.back().witness["sign"] == 1);
  auto r6 = cmd_lemma_cohomo(6);
  CHECK(r6.verdict());
  const auto notes = r6.steps.front().witness["notes"].dump();
  CHECK(notes.find("-x1 - x2") != std::string::npos);
  CHECK_THROWS_AS(cmd_lemma_cohomo(7), UsageError);

  RunOptions typo;
  typo.printed_spin6_weights = true;
  CHECK_FALSE(cmd_lemma_cohomo(6, typo).verdict());
}

TEST_CASE("classify command") {
  auto r = cmd_classify(5, 2, std::nullopt);
  CHECK(r.verdict());
  CHECK(r.steps.back().witness["count"] == 2);
  CHECK(r.steps.front().witness["multiplier"] == 2);
  auto r6 = cmd_classify(6, 2, 2);
  CHECK(r6.verdict());
  CHECK(r6.steps.back().witness["count"] == 1);
  CHECK(r6.steps.front().citation == "Theorem main (5)");
  auto bad = cmd_classify(3, 2, std::nullopt);
  CHECK_FALSE(bad.verdict());
  CHECK(bad.steps.front().witness["condition"] == "p1 = 4k");
  CHECK_THROWS_AS(cmd_classify(4, 2, std::nullopt), UsageError);
  CHECK(expected_bundle_count(2, 0) == 1);
  CHECK(expected_bundle_count(2, 3) == 2);
}

TEST_CASE("embed command") {
  CHECK(cmd_embed().verdict());
  RunOptions t;
  t.tamper_other_candidate = true;
  auto bad = cmd_embed(t);
  CHECK_FALSE(bad.verdict());
  CHECK(bad.steps.back().claim.rfind("(iii)", 0) == 0);
  CHECK(bad.steps.back().witness["failed_step"] == "(iii)");
}

TEST_CASE("reports are cited, deterministic and well formed") {
  RunOptions o;
  o.seed = 7;
  const auto a = cmd_all(o), b = cmd_all(o);
  CHECK(a.verdict());
  CHECK(every_step_cited(a));
  CHECK(to_json(a).dump() == to_json(b).dump());
  const auto j = to_json(a);
  CHECK(j.size() == 5);
  for (const char* key : {"command", "inputs", "seed", "steps", "verdict"}) CHECK(j.contains(key));
  for (const auto& s : j["steps"]) {
    CHECK(s.size() == 4);
    CHECK((s["verdict"] == "pass" || s["verdict"] == "fail"));
  }

  RunOptions typo;
  typo.printed_spin6_weights = true;
  const auto t = cmd_all(typo);
  CHECK_FALSE(t.verdict());
  for (const auto& s : t.steps)
    if (!s.verdict) CHECK(s.claim.rfind("lemma-cohomo n=6", 0) == 0);

  Report empty;
  CHECK_FALSE(empty.verdict());
}

TEST_CASE("binary exit codes and output formats") {
  CHECK(run_cli("clifford 3").status == 0);
  CHECK(run_cli("clifford 0").status == 2);
  CHECK(run_cli("stabilizer 7").status == 2);
  CHECK(run_cli("lemma-cohomo 7").status == 2);
  CHECK(run_cli("classify 3 2").status == 1);
  CHECK(run_cli("classify 3 -8").status == 0);
  CHECK(run_cli("classify 6 2 --euler 2").status == 0);
  CHECK(run_cli("embed --tamper other-candidate").status == 1);
  CHECK(run_cli("nonsense").status == 2);
  CHECK(run_cli("--output yaml embed").status == 2);

  auto j = run_cli("--output json embed");
  CHECK(j.status == 0);
  auto doc = Json::parse(j.out);
  CHECK(doc["verdict"] == "pass");
  CHECK(run_cli("embed --output json").out == j.out);

  auto a = run_cli("--output json --seed 7 all"), b = run_cli("--output json --seed 7 all");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(run_cli("all --printed-spin6-weights").status == 1);
}
