#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "intergraph/report.hpp"

using intergraph::report::Check;
using intergraph::report::Json;
using intergraph::report::Report;
using intergraph::report::Verdict;

namespace {

Report sample_report() {
  Report r("graph");
  r.set_config("preset", "a5");
  r.set_config("full_checks", true);
  r.set_config("workers", 2);
  r.add({"lattice", Verdict::kPass, Json{{"subgroups", 59}}});
  r.add({"diameter_band", Verdict::kPass,
         Json{{"diameter", 4}, {"oracle", 4}}});
  r.add({"big_values", Verdict::kPass,
         Json{{"order", "4154781481226426191177580544000000"}}});
  return r;
}

}  // namespace

TEST_CASE("verdict rendering") {
  CHECK(to_string(Verdict::kPass) == "pass");
  CHECK(to_string(Verdict::kFail) == "fail");
  CHECK(to_string(Verdict::kSkipped) == "skipped");
}

TEST_CASE("passed() semantics: fail trips it, skipped does not") {
  Report r("verify");
  CHECK(r.passed());  // vacuously true when empty
  r.add({"a", Verdict::kPass, Json::object()});
  CHECK(r.passed());
  CHECK_FALSE(r.has_skips());
  r.add({"b", Verdict::kSkipped, Json::object()});
  CHECK(r.passed());
  CHECK(r.has_skips());
  r.add({"c", Verdict::kFail, Json::object()});
  CHECK_FALSE(r.passed());
  CHECK(r.size() == 3);
}

TEST_CASE("duplicate check names are rejected") {
  Report r("verify");
  r.add({"u3_ratio", Verdict::kPass, Json::object()});
  CHECK_THROWS_AS(r.add({"u3_ratio", Verdict::kPass, Json::object()}),
                  std::logic_error);
}

TEST_CASE("JSON shape and key order are canonical") {
  Json j = sample_report().to_json();
  CHECK(j["version"] == "0.1.0");
  CHECK(j["command"] == "graph");
  CHECK(j["config"]["preset"] == "a5");
  CHECK(j["config"]["full_checks"] == true);
  CHECK(j["checks"].size() == 3);
  CHECK(j["checks"][0]["name"] == "lattice");
  CHECK(j["checks"][0]["verdict"] == "pass");
  CHECK(j["checks"][0]["details"]["subgroups"] == 59);
  CHECK(j["passed"] == true);
  // Big integers travel as decimal strings, never as numbers.
  CHECK(j["checks"][2]["details"]["order"].is_string());

  // Top-level key order is fixed by construction.
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"version", "command", "config",
                                         "checks", "passed"});
}

TEST_CASE("serialization is byte-identical across runs and omits timings") {
  Report a = sample_report();
  Report b = sample_report();
  // Timings differ between the two reports but must not affect the JSON.
  a.set_timing("lattice", 0.51);
  b.set_timing("lattice", 123.99);
  b.set_timing("diameter_band", 7.0);
  CHECK(a.to_json_text() == b.to_json_text());
  CHECK(a.to_json_text().back() == '\n');
  CHECK(a.to_json_text().find("0.51") == std::string::npos);

  // The human table is where timings live.
  std::string human = b.to_string();
  CHECK(human.find("123.99s") != std::string::npos);
  CHECK(human.find("7.00s") != std::string::npos);
  CHECK(human.find("PASSED") != std::string::npos);
}

TEST_CASE("write_json produces a parseable file equal to to_json_text") {
  Report r = sample_report();
  std::string path = "test_report_tmp.json";
  r.write_json(path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == r.to_json_text());
  Json parsed = Json::parse(buf.str());
  CHECK(parsed["passed"] == true);
  std::remove(path.c_str());
}

TEST_CASE("shipped schema matches the shape the report emits") {
  // A full validator is exercised from the python smoke tests; here we keep
  // the schema file honest against the emitted shape.
  const char* dir = std::getenv("INTERGRAPH_DATA");
  std::string base = dir ? dir : INTERGRAPH_DATA_DIR;
  std::ifstream in(base + "/report.schema.json");
  REQUIRE(in.good());
  Json schema = Json::parse(in);
  CHECK(schema["type"] == "object");
  const auto& req = schema["required"];
  Json emitted = sample_report().to_json();
  for (const auto& key : req) {
    CAPTURE(key.get<std::string>());
    CHECK(emitted.contains(key.get<std::string>()));
  }
  // Every key the report emits is declared (additionalProperties is false).
  for (auto it = emitted.begin(); it != emitted.end(); ++it) {
    CHECK(schema["properties"].contains(it.key()));
  }
  CHECK(schema["properties"]["checks"]["items"]["properties"]["verdict"]
              ["enum"] == Json::array({"pass", "fail", "skipped"}));
}
