#include "cremona_cli/report.hpp"

#include <sstream>

namespace cremona::cli {

int Report::exit_code() const {
  if (verdict == "Error") return 1;
  if (verdict == "Unknown") return 2;
  return 0;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["args"] = args;
  j["verdict"] = verdict;
  j["result"] = result;
  j["exact"] = exact;
  j["self_check"] = self_check ? Json(*self_check) : Json(nullptr);
  j["notes"] = notes;
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  if (verdict == "Error") j["error"] = {{"code", error_code}, {"message", error_message}};
  return j;
}

Report Report::from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.args = j.at("args").get<std::vector<std::string>>();
  r.verdict = j.at("verdict").get<std::string>();
  r.result = j.at("result");
  r.exact = j.at("exact").get<bool>();
  if (!j.at("self_check").is_null()) r.self_check = j.at("self_check").get<bool>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  if (j.contains("error")) {
    r.error_code = j.at("error").at("code").get<std::string>();
    r.error_message = j.at("error").at("message").get<std::string>();
  }
  return r;
}

bool operator==(const Report& a, const Report& b) { return a.to_json() == b.to_json(); }

namespace {

void print_value(std::ostringstream& os, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, sub] : v.items()) print_value(os, k, sub, indent + 2);
  } else if (v.is_array()) {
    bool flat = true;
    for (const auto& e : v) flat = flat && !e.is_structured();
    if (flat) {
      os << pad << key << ": [";
      bool first = true;
      for (const auto& e : v) {
        os << (first ? "" : ", ") << (e.is_string() ? e.get<std::string>() : e.dump());
        first = false;
      }
      os << "]\n";
    } else {
      os << pad << key << ":\n";
      int i = 0;
      for (const auto& e : v) print_value(os, "- " + std::to_string(++i), e, indent + 2);
    }
  } else {
    os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  os << "verdict: " << verdict << "\n";
  if (verdict == "Error") {
    os << "error: " << error_code << ": " << error_message << "\n";
    return os.str();
  }
  for (const auto& [k, v] : result.items()) print_value(os, k, v, 0);
  if (self_check) os << "self-check: " << (*self_check ? "passed" : "FAILED") << "\n";
  if (!exact) os << "exact: false\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  if (elapsed_ms) os << "elapsed-ms: " << *elapsed_ms << "\n";
  return os.str();
}

}  // namespace cremona::cli
