// config.h
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Copyright 2026 The ensdec Authors.

#ifndef ENSDEC_CONFIG_H_
#define ENSDEC_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ensdec/search.h"

namespace ensdec {

// One configured predictor instance. `path` may contain "%d", which is
// replaced by the 1-based sentence id (per-sentence lattices or n-gram
// posterior files).
struct PredictorSpec {
  std::string kind;  // fst, lm, lex, wc or ngram
  std::string name;  // feature name in n-best lists
  std::string path;
  Cost floor_cost = 20.0;  // lm and lex
  double eos_prob = 0.1;   // lex
  Cost penalty = 1.0;      // wc
  std::vector<double> theta;  // ngram; empty = all ones
};

struct RunConfig {
  std::vector<PredictorSpec> predictors;
  std::vector<double> predictor_weights;
  Strategy decoder = Strategy::kBeam;
  std::size_t beam = 4;
  double max_len_factor = kDefaultMaxLenFactor;
  std::size_t max_len_offset = kDefaultMaxLenOffset;
  std::vector<std::string> outputs{"text"};
  std::size_t nbest_size = 0;  // 0 = every returned hypothesis
  int ngram_order = 4;
  bool ngram_occurrence = false;
  std::string src_test;
  std::string src_wmap;
  std::string trg_wmap;
  std::string output_dir = "out";
  // 1-based inclusive sentence interval.
  std::optional<std::pair<std::size_t, std::size_t>> range;
  std::size_t jobs = 1;
  std::uint64_t expansion_budget = 5'000'000;
  // analyze only
  std::vector<std::string> strategies{"greedy", "beam4", "beam20", "dfs",
                                      "exhaustive"};
  std::string report;  // default: <output_dir>/analyze.tsv

  SearchConfig search_config(std::size_t src_len) const;
};

struct RawValue {
  std::string value;
  // Relative paths are resolved against this directory (the config file's
  // directory for file values, empty for flags).
  std::filesystem::path base_dir;
};

using RawConfig = std::map<std::string, RawValue>;

// "key = value" lines, '#' starts a comment. Throws ConfigError listing
// every malformed line.
RawConfig parse_config_file(std::istream &in,
                            const std::filesystem::path &base_dir = {});

// "--key value" or "--key=value" pairs. "--config" is returned like any
// other key.
RawConfig parse_flags(const std::vector<std::string> &args);

// Flag values win over file values.
RawConfig merge_config(const RawConfig &file_values,
                       const RawConfig &flag_values);

// Validates every key and value. Throws ConfigError listing all offending
// keys at once.
RunConfig build_config(const RawConfig &raw);

// Reads the optional --config file, overlays flags and validates.
RunConfig load_config(const std::vector<std::string> &args);

// Flag reference with defaults, for --help.
std::string config_help();

}  // namespace ensdec

#endif  // ENSDEC_CONFIG_H_
