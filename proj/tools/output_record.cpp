#include "output_record.hpp"

namespace anth::cli {

using nlohmann::ordered_json;

namespace {

ordered_json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
  ordered_json out = ordered_json::array();
  for (const auto& [first, second] : pairs) out.push_back(ordered_json::array({first, second}));
  return out;
}

std::pair<std::string, std::string> pair_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ordered_json::type_error::create(302, "expected a two-element array", &j);
  }
  return {j.at(0).get<std::string>(), j.at(1).get<std::string>()};
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(const ordered_json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : j) out.push_back(pair_from_json(item));
  return out;
}

}  // namespace

ordered_json to_json(const OutputRecord& record) {
  ordered_json j;
  j["n"] = record.n;
  j["initial"] = record.initial;
  j["period"] = record.period;
  j["preperiod_length"] = record.preperiod_length;
  j["logos_witness"] = ordered_json::array({record.logos_witness.first, record.logos_witness.second});
  j["remainders"] = pairs_to_json(record.remainders);
  j["convergents"] = pairs_to_json(record.convergents);
  return j;
}

OutputRecord record_from_json(const ordered_json& j) {
  OutputRecord r;
  r.n = j.at("n").get<std::string>();
  r.initial = j.at("initial").get<std::vector<std::string>>();
  r.period = j.at("period").get<std::vector<std::string>>();
  r.preperiod_length = j.at("preperiod_length").get<std::string>();
  r.logos_witness = pair_from_json(j.at("logos_witness"));
  r.remainders = pairs_from_json(j.at("remainders"));
  r.convergents = pairs_from_json(j.at("convergents"));
  return r;
}

std::string serialize(const OutputRecord& record) { return to_json(record).dump(); }

OutputRecord parse_record(const std::string& text) {
  return record_from_json(ordered_json::parse(text));
}

}  // namespace anth::cli
