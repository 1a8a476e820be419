// search.h
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

#ifndef ENSDEC_SEARCH_H_
#define ENSDEC_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ensdec/ensemble.h"
#include "ensdec/hypothesis.h"

namespace ensdec {

struct SearchStats {
  // One unit per ensemble predict_next on one partial hypothesis.
  std::uint64_t expansions = 0;
  // Complete hypotheses produced during search.
  std::uint64_t completes = 0;
  Cost best_cost = kInfCost;
  // Some hypothesis had to be closed with an infinitely expensive EOS
  // because nothing else was affordable.
  bool dead_end = false;
};

struct DecodeResult {
  // Complete hypotheses, best first under the global tie rule.
  std::vector<Hypothesis> hypotheses;
  SearchStats stats;

  bool empty() const { return hypotheses.empty(); }
  const Hypothesis &best() const { return hypotheses.front(); }
};

enum class Strategy { kGreedy, kBeam, kDfs, kExhaustive };

// Parses "greedy", "beam", "dfs" or "exhaustive".
std::optional<Strategy> parse_strategy(std::string_view name);
std::string strategy_name(Strategy s);

struct SearchConfig {
  Strategy strategy = Strategy::kBeam;
  std::size_t beam = 4;
  // Maximum number of tokens before EOS; EOS is forced afterwards.
  std::size_t max_len = 50;
  // Exhaustive enumeration refuses to visit more nodes than this.
  std::uint64_t expansion_budget = 5'000'000;
};

inline constexpr double kDefaultMaxLenFactor = 3.0;
inline constexpr std::size_t kDefaultMaxLenOffset = 10;

std::size_t max_len_for(std::size_t src_len,
                        double factor = kDefaultMaxLenFactor,
                        std::size_t offset = kDefaultMaxLenOffset);

// All strategies expect the predictor set to be initialized for the
// sentence and search from its current state.

// Repeatedly appends the cheapest candidate (lowest id on ties).
DecodeResult greedy_decode(PredictorSet &predictors, std::size_t max_len);

// Breadth-synchronous beam. Completed hypotheses keep competing for slots;
// search stops once every slot holds a complete hypothesis.
DecodeResult beam_decode(PredictorSet &predictors, std::size_t beam,
                         std::size_t max_len);

// Depth-first branch and bound. Children are visited cheapest first and a
// branch is cut as soon as it is strictly worse than the best complete
// hypothesis, which keeps the result optimal for non-negative step costs.
// Throws ConfigError if a predictor with non-zero weight is not admissible
// or has a negative weight.
DecodeResult dfs_decode(PredictorSet &predictors, std::size_t max_len);

// Every complete hypothesis reachable through finite-cost candidates.
// Throws ConfigError (with an estimate) if the space exceeds the budget.
DecodeResult exhaustive_decode(PredictorSet &predictors, std::size_t max_len,
                               std::uint64_t expansion_budget = 5'000'000);

DecodeResult decode(PredictorSet &predictors, const SearchConfig &config);

// Throws ConfigError naming the first predictor that breaks admissibility.
void check_admissible(const PredictorSet &predictors);

// True iff the decoder's best cost is worse than the exact best by more
// than 1e-9. Throws std::invalid_argument if either result is empty.
bool count_search_errors(const DecodeResult &decoder, const DecodeResult &exact);

}  // namespace ensdec

#endif  // ENSDEC_SEARCH_H_
