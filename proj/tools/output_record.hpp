#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace anth::cli {

/// Machine-readable result of `anth expand --format json`.
///
/// Every integer travels as a decimal string so arbitrary precision
/// survives JSON consumers that parse numbers as doubles.
struct OutputRecord {
  std::string n;
  std::vector<std::string> initial;
  std::vector<std::string> period;
  std::string preperiod_length;
  std::pair<std::string, std::string> logos_witness;
  std::vector<std::pair<std::string, std::string>> remainders;   // (m, n) of e_1, e_2, ...
  std::vector<std::pair<std::string, std::string>> convergents;  // (p, q)

  bool operator==(const OutputRecord&) const = default;
};

nlohmann::ordered_json to_json(const OutputRecord& record);
/// Throws nlohmann::json::exception on schema mismatch.
OutputRecord record_from_json(const nlohmann::ordered_json& j);

/// Compact single-line rendering with fixed field order.
std::string serialize(const OutputRecord& record);
OutputRecord parse_record(const std::string& text);

}  // namespace anth::cli
