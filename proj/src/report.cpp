#include "dq/report.hpp"

#include <stdexcept>

namespace dq {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Experimental:
      return "experimental";
  }
  return "fail";
}

namespace {

Status status_from_name(const std::string& name) {
  if (name == "pass") return Status::Pass;
  if (name == "fail") return Status::Fail;
  if (name == "experimental") return Status::Experimental;
  throw std::invalid_argument("unknown status \"" + name + "\"");
}

}  // namespace

nlohmann::json Report::to_json() const {
  nlohmann::json j{{"command", command},
                   {"inputs", inputs},
                   {"status", status_name(status)},
                   {"data", data}};
  if (counterexample) j["counterexample"] = *counterexample;
  return j;
}

std::string Report::to_line() const { return to_json().dump(); }

Report Report::from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.status = status_from_name(j.at("status").get<std::string>());
  r.data = j.at("data");
  if (j.contains("counterexample")) r.counterexample = j["counterexample"];
  return r;
}

}  // namespace dq
