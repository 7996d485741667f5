#include "circnorm/cli/output_record.hpp"

namespace circnorm::cli {

void to_json(nlohmann::json& j, const OutputRecord& r) {
  j = nlohmann::json{{"command", r.command}, {"parameters", r.parameters}, {"results", r.results}};
}

void from_json(const nlohmann::json& j, OutputRecord& r) {
  j.at("command").get_to(r.command);
  j.at("parameters").get_to(r.parameters);
  r.results = j.at("results");
}

std::string serialize(const OutputRecord& r) { return nlohmann::json(r).dump(2); }

OutputRecord parse(const std::string& text) { return nlohmann::json::parse(text).get<OutputRecord>(); }

}  // namespace circnorm::cli
