// ngram_posterior.h
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

#ifndef ENSDEC_NGRAM_POSTERIOR_H_
#define ENSDEC_NGRAM_POSTERIOR_H_

#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "ensdec/arpa.h"
#include "ensdec/predictor.h"

namespace ensdec {

// N-gram -> posterior probability in [0,1].
struct NgramPosteriorTable {
  int max_order = 0;
  std::map<Ngram, double> post;

  double lookup(const Ngram &g) const {
    auto it = post.find(g);
    return it == post.end() ? 0.0 : it->second;
  }
};

// Lines "tok1 ... tokn : prob" with integer token ids. max_order is the
// longest n-gram present. Throws ParseError.
NgramPosteriorTable load_ngram_posteriors(std::istream &in,
                                          const std::string &source = "ngram");
NgramPosteriorTable load_ngram_posteriors_file(const std::string &path);

// Sorted by (order, token ids), probabilities with six decimals.
void write_ngram_posteriors(const NgramPosteriorTable &table,
                            std::ostream &out);

// Rewards n-grams with high posterior:
//   cost(y) = -sum_n theta_n * post(last n-1 history tokens + y)
// over orders whose context fits into the history; missing n-grams add 0.
// Offered tokens are those that end a table n-gram whose context matches
// the history suffix. Costs may be negative, so the predictor is not
// admissible.
class NgramPosteriorPredictor : public Predictor {
 public:
  // An empty theta means theta_n = 1 for every order. Throws ConfigError if
  // theta is non-finite or shorter than the table order.
  NgramPosteriorPredictor(std::shared_ptr<const NgramPosteriorTable> table,
                          std::vector<double> theta = {});

  std::string kind() const override { return "ngram"; }
  bool admissible() const override { return false; }

 protected:
  void do_initialize(std::span<const Token>) override {}
  Posterior do_predict_next() const override;
  void do_consume(Token) override {}
  std::any do_get_state() const override { return {}; }
  void do_set_state(const std::any &) override {}

 private:
  std::shared_ptr<const NgramPosteriorTable> table_;
  std::vector<double> theta_;
  // n-gram context (all but the last token) -> possible last tokens.
  std::map<Ngram, std::set<Token>> continuations_;
};

}  // namespace ensdec

#endif  // ENSDEC_NGRAM_POSTERIOR_H_
