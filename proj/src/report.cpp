#include "intergraph/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace intergraph::report {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
  }
  throw std::logic_error("unknown verdict");
}

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::set_config(const std::string& key, const Json& value) {
  config_[key] = value;
}

void Report::add(Check check) {
  for (const Check& c : checks_) {
    if (c.name == check.name) {
      throw std::logic_error("duplicate check name: " + check.name);
    }
  }
  checks_.push_back(std::move(check));
}

void Report::set_timing(const std::string& name, double seconds) {
  timings_[name] = seconds;
}

bool Report::passed() const {
  for (const Check& c : checks_) {
    if (c.verdict == Verdict::kFail) return false;
  }
  return true;
}

bool Report::has_skips() const {
  for (const Check& c : checks_) {
    if (c.verdict == Verdict::kSkipped) return true;
  }
  return false;
}

Json Report::to_json() const {
  Json j = Json::object();
  j["version"] = kVersion;
  j["command"] = command_;
  j["config"] = config_;
  Json arr = Json::array();
  for (const Check& c : checks_) {
    Json cj = Json::object();
    cj["name"] = c.name;
    cj["verdict"] = report::to_string(c.verdict);
    cj["details"] = c.details;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  j["passed"] = passed();
  return j;
}

std::string Report::to_json_text() const { return to_json().dump(2) + "\n"; }

void Report::write_json(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << to_json_text();
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string Report::to_string() const {
  std::ostringstream os;
  size_t width = 4;  // at least "name"
  for (const Check& c : checks_) width = std::max(width, c.name.size());
  os << command_ << " (report v" << kVersion << ")\n";
  for (const Check& c : checks_) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << c.name
       << "  " << std::setw(7) << report::to_string(c.verdict);
    auto it = timings_.find(c.name);
    if (it != timings_.end()) {
      os << "  " << std::fixed << std::setprecision(2) << it->second << "s";
    }
    os << "\n";
  }
  os << (passed() ? "PASSED" : "FAILED") << " (" << checks_.size()
     << " checks)\n";
  return os.str();
}

}  // namespace intergraph::report
