// hypothesis.h
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

#ifndef ENSDEC_HYPOTHESIS_H_
#define ENSDEC_HYPOTHESIS_H_

#include <span>
#include <vector>

#include "ensdec/combine.h"
#include "ensdec/predictor.h"
#include "ensdec/types.h"

namespace ensdec {

// Partial or complete target sequence. tokens excludes BOS and ends in EOS
// iff the hypothesis is complete. step_costs[i][k] is what predictor k
// charged for tokens[i]; step_totals[i] is the combined charge.
struct Hypothesis {
  std::vector<Token> tokens;
  Cost total_cost = 0.0;
  std::vector<Cost> breakdown;
  std::vector<std::vector<Cost>> step_costs;
  std::vector<Cost> step_totals;
  // Per-predictor snapshots; only populated for partial hypotheses.
  std::vector<PredictorState> states;

  static Hypothesis empty(std::size_t num_predictors);

  bool complete() const { return !tokens.empty() && tokens.back() == kEos; }
  std::size_t length() const { return tokens.size(); }
};

// Appends token, charging per_predictor_costs. The child carries no
// predictor states; the search attaches them. Throws std::logic_error on a
// complete hypothesis and ConfigError on a length mismatch.
Hypothesis extend(const Hypothesis &hyp, Token token,
                  std::span<const Cost> per_predictor_costs,
                  const PredictorWeights &weights);

// Global tie rule: lower total cost first, then the lexicographically
// smaller token sequence.
bool hypothesis_less(const Hypothesis &a, const Hypothesis &b);

}  // namespace ensdec

#endif  // ENSDEC_HYPOTHESIS_H_
