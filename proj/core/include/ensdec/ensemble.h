// ensemble.h
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

#ifndef ENSDEC_ENSEMBLE_H_
#define ENSDEC_ENSEMBLE_H_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ensdec/combine.h"
#include "ensdec/predictor.h"

namespace ensdec {

// The predictor constellation of one sentence: ordered predictor instances
// with their names and weights. Single-owner, never shared across workers.
class PredictorSet {
 public:
  void add(std::string name, std::unique_ptr<Predictor> predictor,
           double weight = 1.0);

  std::size_t size() const { return predictors_.size(); }
  const PredictorWeights &weights() const { return weights_; }
  const std::vector<std::string> &names() const { return names_; }
  Predictor &at(std::size_t k) { return *predictors_.at(k); }
  const Predictor &at(std::size_t k) const { return *predictors_.at(k); }

  void initialize(std::span<const Token> src_sentence);
  std::vector<Posterior> predict_next() const;
  void consume(Token token);
  std::vector<PredictorState> get_states() const;
  void set_states(const std::vector<PredictorState> &states);

 private:
  std::vector<std::unique_ptr<Predictor>> predictors_;
  std::vector<std::string> names_;
  PredictorWeights weights_;
};

}  // namespace ensdec

#endif  // ENSDEC_ENSEMBLE_H_
