// fst_predictor.h
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

#ifndef ENSDEC_FST_PREDICTOR_H_
#define ENSDEC_FST_PREDICTOR_H_

#include <memory>

#include "ensdec/automaton.h"
#include "ensdec/predictor.h"

namespace ensdec {

// Constrains the target to paths of a deterministic acceptor. Scores the
// outgoing arcs of the current node; EOS costs the node's final weight.
// Consuming a token without an arc moves to a dead sink where nothing but
// an infinitely expensive EOS is offered.
class FstPredictor : public Predictor {
 public:
  // Throws ConfigError if the automaton is not deterministic.
  explicit FstPredictor(std::shared_ptr<const WeightedAutomaton> automaton);

  std::string kind() const override { return "fst"; }
  bool admissible() const override;
  bool bounds_support() const override { return true; }

  bool dead() const { return node_ == kDeadNode; }
  StateId node() const { return node_; }

 protected:
  void do_initialize(std::span<const Token> src_sentence) override;
  Posterior do_predict_next() const override;
  void do_consume(Token token) override;
  std::any do_get_state() const override { return node_; }
  void do_set_state(const std::any &state) override;

 private:
  static constexpr StateId kDeadNode = static_cast<StateId>(-1);

  std::shared_ptr<const WeightedAutomaton> automaton_;
  StateId node_ = kDeadNode;
};

}  // namespace ensdec

#endif  // ENSDEC_FST_PREDICTOR_H_
