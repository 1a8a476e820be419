// commands.h
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

#ifndef ENSDEC_COMMANDS_H_
#define ENSDEC_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

#include "ensdec/config.h"

namespace ensdec {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitData = 2;

// Decodes every sentence in range and writes the configured outputs under
// output_dir. Throws ConfigError or DataError.
void decode_corpus(const RunConfig &config);

struct StrategyRow {
  std::string strategy;
  double avg_expansions = 0.0;
  double search_error_rate = 0.0;
  double avg_best_cost = 0.0;
};

// Runs every requested strategy plus the depth-first exact reference over
// the corpus. Throws ConfigError or DataError.
std::vector<StrategyRow> analyze_corpus(const RunConfig &config);

// Tab-separated report with a header line.
std::string format_analyze_report(const std::vector<StrategyRow> &rows);

// Exception-to-exit-code wrappers; messages go to err.
int decode_command(const RunConfig &config, std::ostream &err);
int analyze_command(const RunConfig &config, std::ostream &out,
                    std::ostream &err);

// Full command line after the program name: "<subcommand> [flags]".
// Subcommands: decode, analyze, synth.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

}  // namespace ensdec

#endif  // ENSDEC_COMMANDS_H_
