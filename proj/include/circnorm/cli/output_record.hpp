#pragma once

#include <map>
#include <string>

#include <json.hpp>

namespace circnorm::cli {

/// One CLI invocation's result. Exact integers inside `results` are always
/// decimal strings so no consumer ever sees them through a double.
struct OutputRecord {
  std::string command;
  std::map<std::string, std::string> parameters;
  nlohmann::json results = nlohmann::json::object();

  bool operator==(const OutputRecord&) const = default;
};

void to_json(nlohmann::json& j, const OutputRecord& r);
/// Throws nlohmann::json::exception on missing or mistyped fields.
void from_json(const nlohmann::json& j, OutputRecord& r);

std::string serialize(const OutputRecord& r);
OutputRecord parse(const std::string& text);

}  // namespace circnorm::cli
