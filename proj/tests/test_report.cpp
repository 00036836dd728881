#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dq/report.hpp"

using namespace dq;

TEST_CASE("serialization carries all fields and omits absent counterexamples") {
  Report r;
  r.command = "dim";
  r.inputs = {{"type", "A2"}, {"weight", {1, 1}}};
  r.data = {{"dim", 8}};
  auto j = r.to_json();
  CHECK(j["command"] == "dim");
  CHECK(j["status"] == "pass");
  CHECK(j["data"]["dim"] == 8);
  CHECK_FALSE(j.contains("counterexample"));

  r.status = Status::Fail;
  r.counterexample = nlohmann::json{{"where", "node 1"}};
  auto j2 = r.to_json();
  CHECK(j2["status"] == "fail");
  CHECK(j2["counterexample"]["where"] == "node 1");
}

TEST_CASE("a report line is single-line json") {
  Report r;
  r.command = "verify.split";
  auto line = r.to_line();
  CHECK(line.find('\n') == std::string::npos);
  CHECK(nlohmann::json::parse(line)["command"] == "verify.split");
}

TEST_CASE("round trip preserves every field") {
  Report r;
  r.command = "qverify.recursion";
  r.inputs = {{"node", 2}, {"m", 3}};
  r.status = Status::Experimental;
  r.data = {{"holds", true}};
  r.counterexample = nlohmann::json{{"detail", "only reported"}};
  auto back = Report::from_json(r.to_json());
  CHECK(back.command == r.command);
  CHECK(back.inputs == r.inputs);
  CHECK(back.status == r.status);
  CHECK(back.data == r.data);
  REQUIRE(back.counterexample.has_value());
  CHECK(*back.counterexample == *r.counterexample);
}

TEST_CASE("unknown statuses are rejected") {
  auto j = Report{}.to_json();
  j["status"] = "maybe";
  CHECK_THROWS_AS(Report::from_json(j), std::invalid_argument);
}

TEST_CASE("status names") {
  CHECK(status_name(Status::Pass) == "pass");
  CHECK(status_name(Status::Fail) == "fail");
  CHECK(status_name(Status::Experimental) == "experimental");
}
