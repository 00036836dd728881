#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace dq {

enum class Status { Pass, Fail, Experimental };

std::string status_name(Status s);

// One machine-readable result line.  For verification commands the status is
// fail exactly when a counterexample is attached; experimental marks results
// the tool reports without asserting.
struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  Status status = Status::Pass;
  nlohmann::json data = nlohmann::json::object();
  std::optional<nlohmann::json> counterexample;

  nlohmann::json to_json() const;
  // Single-line JSON rendering.
  std::string to_line() const;
  static Report from_json(const nlohmann::json& j);
};

}  // namespace dq
