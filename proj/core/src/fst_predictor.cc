// fst_predictor.cc
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

#include "ensdec/fst_predictor.h"

#include "ensdec/errors.h"

namespace ensdec {

FstPredictor::FstPredictor(std::shared_ptr<const WeightedAutomaton> automaton)
    : automaton_(std::move(automaton)) {
  if (!automaton_ || automaton_->num_states() == 0)
    throw ConfigError("fst predictor needs a non-empty automaton");
  if (auto v = validate_deterministic(*automaton_))
    throw ConfigError("fst predictor needs a deterministic automaton; state " +
                      std::to_string(v->state) + " repeats label " +
                      std::to_string(to_int(v->label)));
}

bool FstPredictor::admissible() const { return automaton_->min_weight() >= 0; }

void FstPredictor::do_initialize(std::span<const Token>) {
  node_ = automaton_->start();
}

Posterior FstPredictor::do_predict_next() const {
  Posterior p;
  p.default_cost = kInfCost;
  if (dead()) {
    p.entries.emplace(kEos, kInfCost);
    return p;
  }
  for (const auto &arc : automaton_->arcs(node_))
    p.entries.emplace(arc.label, arc.weight);
  p.entries.emplace(kEos, automaton_->final_weight(node_));
  return p;
}

void FstPredictor::do_consume(Token token) {
  if (dead()) return;
  for (const auto &arc : automaton_->arcs(node_)) {
    if (arc.label == token) {
      node_ = arc.next_state;
      return;
    }
  }
  node_ = kDeadNode;
}

void FstPredictor::do_set_state(const std::any &state) {
  node_ = std::any_cast<StateId>(state);
}

}  // namespace ensdec
