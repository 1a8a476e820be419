// predictor.h
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

#ifndef ENSDEC_PREDICTOR_H_
#define ENSDEC_PREDICTOR_H_

#include <any>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ensdec/types.h"

namespace ensdec {

// One predictor's scores for the next target position: an explicit sparse
// support plus the cost every other token receives (UNK matching).
struct Posterior {
  std::map<Token, Cost> entries;
  Cost default_cost = kInfCost;

  Cost lookup(Token t) const {
    auto it = entries.find(t);
    return it == entries.end() ? default_cost : it->second;
  }

  friend bool operator==(const Posterior &, const Posterior &) = default;
};

// Snapshot of a predictor: the target history (starting at BOS) plus
// whatever the implementation needs to resume scoring.
struct PredictorState {
  std::vector<Token> history;
  std::any internal;
};

// Left-to-right scoring module. Implementations override the do_* hooks;
// the public entry points keep the shared target history in sync so that
// every predictor exposes the same history() after initialize/consume.
class Predictor {
 public:
  virtual ~Predictor() = default;

  void initialize(std::span<const Token> src_sentence);
  Posterior predict_next() const { return do_predict_next(); }
  void consume(Token token);
  PredictorState get_state() const;
  void set_state(const PredictorState &state);

  const std::vector<Token> &history() const { return history_; }

  virtual std::string kind() const = 0;

  // True iff every cost this predictor can serve is >= 0, which is what
  // admissible pruning in depth-first search relies on.
  virtual bool admissible() const { return true; }

  // True iff default_cost is always +inf, i.e. the explicit support bounds
  // the branching factor.
  virtual bool bounds_support() const { return false; }

 protected:
  virtual void do_initialize(std::span<const Token> src_sentence) = 0;
  virtual Posterior do_predict_next() const = 0;
  virtual void do_consume(Token token) = 0;
  virtual std::any do_get_state() const = 0;
  virtual void do_set_state(const std::any &state) = 0;

 private:
  std::vector<Token> history_;
};

}  // namespace ensdec

#endif  // ENSDEC_PREDICTOR_H_
