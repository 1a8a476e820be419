// lex_predictor.h
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

#ifndef ENSDEC_LEX_PREDICTOR_H_
#define ENSDEC_LEX_PREDICTOR_H_

#include <istream>
#include <map>
#include <memory>
#include <string>

#include "ensdec/predictor.h"

namespace ensdec {

// Lexical translation probabilities t(target | source).
class LexTable {
 public:
  // Lines "src_id trg_id prob". Rejects probabilities outside (0,1],
  // repeated pairs and sources whose mass exceeds 1 + 1e-6.
  static LexTable load(std::istream &in, const std::string &source = "lex");
  static LexTable load_file(const std::string &path);

  // Same validation as load.
  void add(Token src, Token trg, double prob);

  const std::map<Token, double> *translations(Token src) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::map<Token, std::map<Token, double>> table_;
};

// Context-free translation model: for a source x and target y the cost is
// -ln(mean_i t(y | x_i)). Targets without mass get the floor cost.
class LexPredictor : public Predictor {
 public:
  static constexpr Cost kDefaultFloorCost = 20.0;
  static constexpr double kDefaultEosProb = 0.1;

  // Throws ConfigError for a negative floor or p_eos outside (0,1].
  LexPredictor(std::shared_ptr<const LexTable> table,
               Cost floor_cost = kDefaultFloorCost,
               double eos_prob = kDefaultEosProb);

  std::string kind() const override { return "lex"; }

 protected:
  // Throws DataError on an empty source sentence.
  void do_initialize(std::span<const Token> src_sentence) override;
  Posterior do_predict_next() const override { return posterior_; }
  void do_consume(Token) override {}
  std::any do_get_state() const override { return {}; }
  void do_set_state(const std::any &) override {}

 private:
  std::shared_ptr<const LexTable> table_;
  Cost floor_cost_;
  double eos_prob_;
  Posterior posterior_;
};

}  // namespace ensdec

#endif  // ENSDEC_LEX_PREDICTOR_H_
