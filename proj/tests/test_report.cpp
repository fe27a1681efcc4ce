#include "capelli/report.hpp"
#include "capelli/verify.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace capelli;

namespace {

RunReport sample() {
  RunReport r;
  r.command = "verify demo";
  r.params = {{"demo.n", "2"}};
  r.checks = {{"alpha", {{"n", "0"}}, true, "1", "1"},
              {"beta", {{"n", "1"}, {"x", "1/2"}}, false, "a,b", "say \"hi\""},
              {"alpha", {{"n", "2"}}, true, "", ""}};
  return r;
}

std::vector<CheckResult> one(const std::string& name, int v) {
  return {CheckResult{name, {{"v", std::to_string(v)}}, true, "", ""}};
}

}  // namespace

TEST_CASE("run_tasks keeps task order for any job count") {
  std::vector<std::pair<std::string, CheckTask>> tasks;
  for (int i = 0; i < 40; ++i)
    tasks.push_back({"t", [i] {
                       std::vector<CheckResult> out = one("t", i);
                       if (i % 3 == 0) out.push_back(one("u", i)[0]);
                       return out;
                     }});
  auto serial = run_tasks(tasks, 1);
  for (unsigned jobs : {2u, 4u, 7u, 0u}) {
    auto par = run_tasks(tasks, jobs);
    REQUIRE(par.size() == serial.size());
    for (size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].name == serial[i].name);
      CHECK(par[i].params == serial[i].params);
    }
  }
  CHECK(serial.size() == 54);
  CHECK(run_tasks({}, 3).empty());
}

TEST_CASE("a throwing task becomes one failing check") {
  std::vector<std::pair<std::string, CheckTask>> tasks{
      {"ok", [] { return one("ok", 1); }},
      {"boom", []() -> std::vector<CheckResult> { throw Error(ErrorCode::Internal, "broken"); }},
      {"ok", [] { return one("ok", 2); }}};
  auto out = run_tasks(tasks, 2);
  REQUIRE(out.size() == 3);
  CHECK(out[1].name == "boom");
  CHECK_FALSE(out[1].pass);
  CHECK(out[1].params[0].second == "broken");
  CHECK(out[2].params[0].second == "2");
}

TEST_CASE("JSON report") {
  auto j = nlohmann::json::parse(to_json(sample()));
  CHECK(j["version"] == kVersion);
  CHECK(j["command"] == "verify demo");
  CHECK(j["params"]["demo.n"] == "2");
  CHECK(j["checks"].size() == 3);
  CHECK(j["checks"][1]["status"] == "fail");
  CHECK(j["checks"][1]["params"]["x"] == "1/2");
  CHECK(j["checks"][1]["rhs"] == "say \"hi\"");
  CHECK(j["summary"]["total"] == 3);
  CHECK(j["summary"]["passed"] == 2);
  CHECK(j["summary"]["failed"] == 1);
}

TEST_CASE("CSV report") {
  CHECK(to_csv(sample()) ==
        "name,params,status,lhs,rhs\n"
        "alpha,n=0,pass,1,1\n"
        "beta,n=1;x=1/2,fail,\"a,b\",\"say \"\"hi\"\"\"\n"
        "alpha,n=2,pass,,\n");
}

TEST_CASE("text report") {
  CHECK(to_text(sample()) ==
        "verify demo\n"
        "  alpha  2/2\n"
        "  beta   0/1\n"
        "FAIL beta n=1 x=1/2\n"
        "  lhs: a,b\n"
        "  rhs: say \"hi\"\n"
        "total 3, passed 2, failed 1\n");
}

TEST_CASE("verify rejects bounds above the caps and unknown suites") {
  VerifyOptions o;
  o.suite = "capelli";
  o.size_max = 15;
  try {
    run_verify(o);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Cap);
  }
  o.size_max = 2;
  o.k_max = 7;
  CHECK_THROWS_AS(run_verify(o), Error);
  o.k_max = -1;
  CHECK_THROWS_AS(run_verify(o), Error);
  VerifyOptions d;
  d.suite = "dougall";
  d.a_max = 13;
  CHECK_THROWS_AS(run_verify(d), Error);
  d.caps.dougall = 13;
  d.bcd_max = 1;
  CHECK(run_verify(d).failed() == 0);
  VerifyOptions u;
  u.suite = "nope";
  CHECK_THROWS_AS(run_verify(u), Error);
}

TEST_CASE("small verify runs") {
  VerifyOptions o;
  o.suite = "identity-e";
  o.jobs = 2;
  RunReport r = run_verify(o);
  CHECK(r.total() == 120);
  CHECK(r.failed() == 0);
  CHECK(r.command == "verify identity-e");
  CHECK(r.params == std::vector<std::pair<std::string, std::string>>{{"identity-e.N_max", "7"}});

  o.suite = "dougall";
  o.a_max = 2;
  o.bcd_max = 1;
  r = run_verify(o);
  CHECK(r.total() == 16);
  CHECK(r.failed() == 0);

  o.suite = "capelli";
  o.k_max = 1;
  o.size_max = 4;
  r = run_verify(o);
  CHECK(r.total() > 0);
  CHECK(r.failed() == 0);

  o.suite = "deligne";
  o.k_max = 1;
  o.size_max = 3;
  o.d_max = 4;
  o.t_list = std::vector<Rat>{0, Rat(1, 2)};
  r = run_verify(o);
  CHECK(r.failed() == 0);
  CHECK(r.params.back() == std::pair<std::string, std::string>{"deligne.t_list", "0,1/2"});
}

TEST_CASE("suite names") {
  CHECK(suite_names() ==
        std::vector<std::string>{"knop-sahi", "capelli", "identity-e", "logderiv", "chain", "dougall", "deligne"});
  CHECK(default_t_list().size() == 16);
}
