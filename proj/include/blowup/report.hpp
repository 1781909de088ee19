#ifndef BLOWUP_REPORT_HPP
#define BLOWUP_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace blowup {

/// Where an expected value comes from: a source-text constant, a
/// triviality, or an independently derived oracle.
enum class Provenance { paper, trivial, derived };

inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::paper: return "PAPER";
    case Provenance::trivial: return "TRIVIAL";
    case Provenance::derived: return "DERIVED";
  }
  return "?";
}

struct Claim {
  std::string id;
  std::string anchor;  // the statement being verified, in plain math
  std::string computed;
  std::string expected;
  Provenance provenance = Provenance::derived;
  bool pass = false;
};

/// Structured outcome of a command or verification suite. Everything
/// except the wall-clock timings is deterministic for fixed inputs.
struct VerificationReport {
  std::string command;
  std::string ring;
  std::string field;
  std::string order;
  std::vector<Claim> claims;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<std::string> notes;
  nlohmann::ordered_json result;  // command-specific payload

  bool status() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }

  Claim& check(std::string id, std::string anchor, std::string computed,
               std::string expected, Provenance prov) {
    claims.push_back(Claim{std::move(id), std::move(anchor), std::move(computed),
                           std::move(expected), prov, false});
    claims.back().pass = claims.back().computed == claims.back().expected;
    return claims.back();
  }

  Claim& check_bool(std::string id, std::string anchor, bool computed,
                    Provenance prov) {
    return check(std::move(id), std::move(anchor), computed ? "true" : "false",
                 "true", prov);
  }

  void note(std::string text) { notes.push_back(std::move(text)); }
  void timing(std::string step, double ms) {
    timings_ms.emplace_back(std::move(step), ms);
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["ring"] = ring;
    j["field"] = field;
    j["order"] = order;
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : claims) {
      nlohmann::ordered_json jc;
      jc["id"] = c.id;
      jc["anchor"] = c.anchor;
      jc["computed"] = c.computed;
      jc["expected"] = c.expected;
      jc["provenance"] = provenance_name(c.provenance);
      jc["pass"] = c.pass;
      j["claims"].push_back(std::move(jc));
    }
    j["timings_ms"] = nlohmann::ordered_json::object();
    for (const auto& [step, ms] : timings_ms) j["timings_ms"][step] = ms;
    if (!notes.empty()) j["notes"] = notes;
    if (!result.is_null()) j["result"] = result;
    j["status"] = status() ? "pass" : "fail";
    return j;
  }

  std::string to_text() const {
    std::string out;
    out += "command: " + command + "\n";
    out += "ring: " + ring + " | field: " + field + " | order: " + order + "\n";
    for (const auto& n : notes) out += "note: " + n + "\n";
    for (const auto& c : claims) {
      out += c.pass ? "PASS " : "FAIL ";
      out += c.id + "  " + c.anchor + "  [" +
             std::string(provenance_name(c.provenance)) + "]";
      out += "  computed=" + c.computed + " expected=" + c.expected + "\n";
    }
    std::size_t passed = 0;
    for (const auto& c : claims) passed += c.pass ? 1 : 0;
    out += "status: " + std::string(status() ? "PASS" : "FAIL") + " (" +
           std::to_string(passed) + "/" + std::to_string(claims.size()) +
           " claims)\n";
    return out;
  }
};

}  // namespace blowup

#endif  // BLOWUP_REPORT_HPP
