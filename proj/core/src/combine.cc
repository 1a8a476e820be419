// combine.cc
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

#include "ensdec/combine.h"

#include <cmath>
#include <string>

#include "ensdec/errors.h"

namespace ensdec {

PredictorWeights::PredictorWeights(std::vector<double> values) {
  for (double w : values) push_back(w);
}

void PredictorWeights::push_back(double w) {
  if (!std::isfinite(w))
    throw ConfigError("predictor weights must be finite, got " +
                      std::to_string(w));
  values_.push_back(w);
}

Cost weighted_cost(double weight, Cost cost) {
  if (weight == 0.0) return 0.0;
  if (std::isinf(cost) && cost > 0) return kInfCost;
  return weight * cost;
}

Cost weighted_sum(const PredictorWeights &weights,
                  std::span<const Cost> costs) {
  if (costs.size() != weights.size())
    throw ConfigError("got " + std::to_string(costs.size()) +
                      " predictor costs for " +
                      std::to_string(weights.size()) + " weights");
  Cost total = 0.0;
  for (std::size_t k = 0; k < costs.size(); ++k)
    total += weighted_cost(weights[k], costs[k]);
  return total;
}

std::map<Token, Cost> combine(std::span<const Posterior> posteriors,
                              const PredictorWeights &weights,
                              const std::set<Token> &candidates) {
  if (posteriors.size() != weights.size())
    throw ConfigError("got " + std::to_string(posteriors.size()) +
                      " posteriors for " + std::to_string(weights.size()) +
                      " predictor weights");
  std::map<Token, Cost> combined;
  std::vector<Cost> costs(posteriors.size());
  for (Token t : candidates) {
    for (std::size_t k = 0; k < posteriors.size(); ++k)
      costs[k] = posteriors[k].lookup(t);
    combined.emplace_hint(combined.end(), t, weighted_sum(weights, costs));
  }
  return combined;
}

std::set<Token> candidate_tokens(std::span<const Posterior> posteriors) {
  std::set<Token> candidates{kEos};
  for (const auto &p : posteriors)
    for (const auto &[t, c] : p.entries) candidates.insert(t);
  return candidates;
}

}  // namespace ensdec
