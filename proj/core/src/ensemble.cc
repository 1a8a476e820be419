// ensemble.cc
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

#include "ensdec/ensemble.h"

#include "ensdec/errors.h"

namespace ensdec {

void PredictorSet::add(std::string name, std::unique_ptr<Predictor> predictor,
                       double weight) {
  weights_.push_back(weight);
  names_.push_back(std::move(name));
  predictors_.push_back(std::move(predictor));
}

void PredictorSet::initialize(std::span<const Token> src_sentence) {
  for (auto &p : predictors_) p->initialize(src_sentence);
}

std::vector<Posterior> PredictorSet::predict_next() const {
  std::vector<Posterior> posteriors;
  posteriors.reserve(predictors_.size());
  for (const auto &p : predictors_) posteriors.push_back(p->predict_next());
  return posteriors;
}

void PredictorSet::consume(Token token) {
  for (auto &p : predictors_) p->consume(token);
}

std::vector<PredictorState> PredictorSet::get_states() const {
  std::vector<PredictorState> states;
  states.reserve(predictors_.size());
  for (const auto &p : predictors_) states.push_back(p->get_state());
  return states;
}

void PredictorSet::set_states(const std::vector<PredictorState> &states) {
  if (states.size() != predictors_.size())
    throw std::logic_error("state vector does not match predictor set");
  for (std::size_t k = 0; k < predictors_.size(); ++k)
    predictors_[k]->set_state(states[k]);
}

}  // namespace ensdec
