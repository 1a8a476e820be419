// combine.h
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

#ifndef ENSDEC_COMBINE_H_
#define ENSDEC_COMBINE_H_

#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "ensdec/predictor.h"
#include "ensdec/types.h"

namespace ensdec {

// One linear-combination weight per predictor instance. Weights must be
// finite; they are not normalized.
class PredictorWeights {
 public:
  PredictorWeights() = default;
  explicit PredictorWeights(std::vector<double> values);
  PredictorWeights(std::initializer_list<double> values)
      : PredictorWeights(std::vector<double>(values)) {}

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  std::span<const double> values() const { return values_; }
  void push_back(double w);

 private:
  std::vector<double> values_;
};

// w * c with the conventions: a zero weight silences the predictor
// entirely (0 * inf == 0), and +inf stays +inf for any non-zero weight.
Cost weighted_cost(double weight, Cost cost);

// Sum over k of weighted_cost(weights[k], costs[k]).
Cost weighted_sum(const PredictorWeights &weights, std::span<const Cost> costs);

// Combined cost of each candidate. Candidates whose cost is +inf are kept.
// Throws ConfigError if posteriors and weights differ in length.
std::map<Token, Cost> combine(std::span<const Posterior> posteriors,
                              const PredictorWeights &weights,
                              const std::set<Token> &candidates);

// Union of explicit supports, always including EOS.
std::set<Token> candidate_tokens(std::span<const Posterior> posteriors);

}  // namespace ensdec

#endif  // ENSDEC_COMBINE_H_
