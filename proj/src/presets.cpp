#include "intergraph/presets.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef INTERGRAPH_DATA_DIR
#define INTERGRAPH_DATA_DIR ""
#endif

namespace intergraph::permgrp {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string data_dir_or_default(const std::string& data_dir) {
  if (!data_dir.empty()) return data_dir;
  if (const char* env = std::getenv("INTERGRAPH_DATA"); env && *env) return env;
  return INTERGRAPH_DATA_DIR;
}

Preset load_preset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open preset file: " + path);
  Preset p;
  std::string line;
  bool first = true;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + msg);
    };
    if (first) {
      // The format requires `degree N` before anything else.
      std::istringstream ss(line);
      std::string key;
      if (!(ss >> key >> p.degree) || key != "degree" || p.degree == 0)
        fail("preset file must start with 'degree N'");
      first = false;
      continue;
    }
    if (line[0] == '(') {
      p.generators.push_back(parse_cycles(line, p.degree));
      continue;
    }
    std::istringstream ss(line);
    std::string key, value;
    ss >> key >> value;
    if (key == "order") {
      p.expected_order = std::stoull(value);
    } else if (key == "name") {
      p.name = value;
    } else if (key == "simple") {
      if (value != "true" && value != "false") fail("simple must be true or false");
      p.simple = value == "true";
    } else if (key == "family") {
      p.family = value;
    } else if (key == "q") {
      p.q = uint32_t(std::stoul(value));
    } else {
      fail("unknown preset key: " + key);
    }
  }
  if (first) throw std::runtime_error(path + ": empty preset file");
  if (p.name.empty()) throw std::runtime_error(path + ": missing name");
  if (p.expected_order == 0) throw std::runtime_error(path + ": missing order");
  if (p.generators.empty()) throw std::runtime_error(path + ": no generators");
  return p;
}

Preset find_preset(const std::string& name, const std::string& data_dir) {
  for (char c : name)
    if (!std::isalnum(uint8_t(c)) && c != '_')
      throw std::runtime_error("invalid preset name: " + name);
  return load_preset_file(data_dir_or_default(data_dir) + "/presets/" + name + ".txt");
}

std::vector<std::string> preset_names() {
  return {"a5",      "a6",      "a7",      "s3",     "psl2_7",
          "psl2_11", "psl2_13", "psl2_19", "u3_3"};
}

Group build_group(const Preset& p, uint64_t cap) {
  Group g = Group::generate(p.degree, p.generators, cap);
  if (g.order() != p.expected_order)
    throw std::runtime_error("preset " + p.name + ": generated order " +
                             std::to_string(g.order()) + " does not match expected " +
                             std::to_string(p.expected_order));
  return g;
}

}  // namespace intergraph::permgrp
