// arpa.h
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

#ifndef ENSDEC_ARPA_H_
#define ENSDEC_ARPA_H_

#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ensdec/predictor.h"
#include "ensdec/word_map.h"

namespace ensdec {

using Ngram = std::vector<Token>;

// Backoff n-gram language model read from ARPA text (log10 values).
// Words are read as integer ids, or through a word map when one is given;
// <s>, </s> and <unk> always denote BOS, EOS and UNK.
class ArpaModel {
 public:
  static constexpr int kMaxOrder = 5;
  // -ln(2e-9), charged for words with neither a unigram nor a UNK unigram.
  static constexpr Cost kDefaultFloorCost = 20.0;

  // Throws ParseError with the offending line number.
  static ArpaModel load(std::istream &in, const std::string &source = "arpa",
                        const WordMap *wmap = nullptr);
  static ArpaModel load_file(const std::string &path,
                             const WordMap *wmap = nullptr);

  int order() const { return order_; }
  std::optional<double> log10_prob(const Ngram &ngram) const;
  std::optional<double> log10_backoff(const Ngram &ngram) const;
  std::size_t num_ngrams(int n) const;

  // Every unigram except BOS.
  const std::vector<Token> &vocabulary() const { return vocabulary_; }

  void set_floor_cost(Cost c) { floor_cost_ = c; }
  Cost floor_cost() const { return floor_cost_; }

  // -ln P(token | history) under the backoff recursion. Only the last
  // order-1 history tokens are used.
  Cost cost(std::span<const Token> history, Token token) const;

 private:
  int order_ = 0;
  std::map<Ngram, double> prob_;
  std::map<Ngram, double> backoff_;
  std::vector<std::size_t> counts_;
  std::vector<Token> vocabulary_;
  Cost floor_cost_ = kDefaultFloorCost;
};

// Serves every vocabulary token of an ARPA model; tokens outside the
// vocabulary get the cost of UNK in the current context.
class LmPredictor : public Predictor {
 public:
  explicit LmPredictor(std::shared_ptr<const ArpaModel> model);

  std::string kind() const override { return "lm"; }

 protected:
  void do_initialize(std::span<const Token> src_sentence) override;
  Posterior do_predict_next() const override;
  void do_consume(Token token) override;
  std::any do_get_state() const override { return context_; }
  void do_set_state(const std::any &state) override;

 private:
  std::shared_ptr<const ArpaModel> model_;
  std::vector<Token> context_;
};

}  // namespace ensdec

#endif  // ENSDEC_ARPA_H_
