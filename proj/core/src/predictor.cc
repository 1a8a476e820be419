// predictor.cc
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

#include "ensdec/predictor.h"

namespace ensdec {

void Predictor::initialize(std::span<const Token> src_sentence) {
  history_.assign(1, kBos);
  do_initialize(src_sentence);
}

void Predictor::consume(Token token) {
  history_.push_back(token);
  do_consume(token);
}

PredictorState Predictor::get_state() const {
  return PredictorState{history_, do_get_state()};
}

void Predictor::set_state(const PredictorState &state) {
  history_ = state.history;
  do_set_state(state.internal);
}

}  // namespace ensdec
