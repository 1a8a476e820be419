// hypothesis.cc
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

#include "ensdec/hypothesis.h"

#include <algorithm>
#include <stdexcept>

namespace ensdec {

Hypothesis Hypothesis::empty(std::size_t num_predictors) {
  Hypothesis h;
  h.breakdown.assign(num_predictors, 0.0);
  return h;
}

Hypothesis extend(const Hypothesis &hyp, Token token,
                  std::span<const Cost> per_predictor_costs,
                  const PredictorWeights &weights) {
  if (hyp.complete())
    throw std::logic_error("cannot extend a complete hypothesis");
  const Cost step = weighted_sum(weights, per_predictor_costs);
  Hypothesis child;
  child.tokens.reserve(hyp.tokens.size() + 1);
  child.tokens = hyp.tokens;
  child.tokens.push_back(token);
  child.breakdown = hyp.breakdown;
  for (std::size_t k = 0; k < per_predictor_costs.size(); ++k)
    child.breakdown[k] += per_predictor_costs[k];
  child.step_costs = hyp.step_costs;
  child.step_costs.emplace_back(per_predictor_costs.begin(),
                                per_predictor_costs.end());
  child.step_totals = hyp.step_totals;
  child.step_totals.push_back(step);
  child.total_cost = hyp.total_cost + step;
  return child;
}

bool hypothesis_less(const Hypothesis &a, const Hypothesis &b) {
  if (a.total_cost != b.total_cost) return a.total_cost < b.total_cost;
  return std::lexicographical_compare(a.tokens.begin(), a.tokens.end(),
                                      b.tokens.begin(), b.tokens.end());
}

}  // namespace ensdec
