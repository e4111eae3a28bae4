#pragma once
// Structured run reports.
//
// A Report collects named checks, each with a verdict ("pass", "fail" or
// "skipped") and a details object.  The JSON serialization is canonical:
// insertion-ordered keys, two-space indentation, a single trailing newline,
// and no wall-clock data, so two runs with the same configuration produce
// byte-identical files.  Timings are recorded separately and appear only in
// the human-readable table.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace intergraph::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

enum class Verdict : uint8_t { kPass, kFail, kSkipped };

std::string to_string(Verdict v);

struct Check {
  std::string name;
  Verdict verdict = Verdict::kFail;
  Json details = Json::object();
};

class Report {
 public:
  explicit Report(std::string command);

  // Configuration echo; values appear under "config" in insertion order.
  void set_config(const std::string& key, const Json& value);

  // Adds a check.  Each name may appear at most once per report.
  void add(Check check);

  // Wall-clock seconds for a named check; human output only.
  void set_timing(const std::string& name, double seconds);

  // True iff no check failed.  Skipped checks do not count as failures.
  bool passed() const;
  bool has_skips() const;
  size_t size() const { return checks_.size(); }
  const std::vector<Check>& checks() const { return checks_; }

  Json to_json() const;

  // Canonical serialization: to_json().dump(2) plus a trailing newline.
  std::string to_json_text() const;
  void write_json(const std::string& path) const;

  // Human-readable summary table (includes timings when recorded).
  std::string to_string() const;

 private:
  std::string command_;
  Json config_ = Json::object();
  std::vector<Check> checks_;
  std::map<std::string, double> timings_;
};

}  // namespace intergraph::report
