#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "intergraph/perm.hpp"

namespace intergraph::permgrp {

/// A named group preset loaded from a plain-text file. The file must start
/// with `degree N`, carries `order`/`name`/`simple`/`family` (and `q` where
/// meaningful) metadata lines, and lists one generator per line in
/// disjoint-cycle notation. `#` starts a comment.
struct Preset {
  std::string name;
  uint32_t degree = 0;
  uint64_t expected_order = 0;
  bool simple = false;
  std::string family;  // alternating | psl2 | unitary | control
  uint32_t q = 0;      // parameter for psl2/unitary families, else 0
  std::vector<Perm> generators;
};

/// Parses a preset file. Throws std::runtime_error on malformed content.
Preset load_preset_file(const std::string& path);

/// Resolves `name` against the data directory (argument, else the
/// INTERGRAPH_DATA environment variable, else the built-in location) and
/// loads it.
Preset find_preset(const std::string& name, const std::string& data_dir = "");

/// Names shipped with the toolkit, in canonical order.
std::vector<std::string> preset_names();

/// Materializes the preset's group and confirms the expected order; throws
/// std::runtime_error on mismatch (a transcription error in the file).
Group build_group(const Preset& p, uint64_t cap = Group::kDefaultOrderCap);

/// Resolved data directory (for consumers that need other data files).
std::string data_dir_or_default(const std::string& data_dir = "");

}  // namespace intergraph::permgrp
