#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cremona::cli {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  int max_iter = 16;
  double tol = 1e-10;
  std::uint64_t seed = 20261016;
  bool timing = false;
};

// One invocation. Field names of `result` are stable; exact values are strings.
struct Report {
  std::string command;
  std::vector<std::string> args;
  // Yes, No, Unknown, Value or Error
  std::string verdict = "Value";
  Json result = Json::object();
  // false when the verdict rests on a heuristic rather than a proof
  bool exact = true;
  // Present when a witness was re-verified before printing.
  std::optional<bool> self_check;
  std::vector<std::string> notes;
  std::optional<double> elapsed_ms;
  std::string error_code;
  std::string error_message;

  int exit_code() const;

  Json to_json() const;
  static Report from_json(const Json& j);
  std::string to_text() const;

  friend bool operator==(const Report& a, const Report& b);
};

}  // namespace cremona::cli
