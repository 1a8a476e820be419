// contract.h
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

#ifndef ENSDEC_TESTS_CONTRACT_H_
#define ENSDEC_TESTS_CONTRACT_H_

// Behavioural contract every predictor must honour, written as plain checks
// that return human-readable failures so both the unit tests and the
// acceptance binary can run them.

#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ensdec/arpa.h"
#include "ensdec/fst_predictor.h"
#include "ensdec/lex_predictor.h"
#include "ensdec/ngram_posterior.h"
#include "ensdec/random.h"
#include "ensdec/word_count_predictor.h"
#include "testing/arpa_fixtures.h"
#include "testing/instances.h"

namespace ensdec::testing {

struct ContractCase {
  std::string name;
  std::function<std::unique_ptr<Predictor>()> make;
  std::vector<Token> pool;  // tokens consumed during random walks
};

inline std::vector<ContractCase> contract_cases() {
  auto fst = std::make_shared<WeightedAutomaton>(
      parse_att("0 1 3 0.5\n0 2 4 1.5\n1 1 3 0.25\n1 2 5 0.1\n2 0 4 2.0\n2 0.3\n"));
  auto lm = std::make_shared<ArpaModel>(parse_arpa(kArpaOrder3));
  auto lex = std::make_shared<LexTable>();
  lex->add(tok(3), tok(10), 0.7);
  lex->add(tok(3), tok(11), 0.2);
  lex->add(tok(4), tok(3), 0.5);
  std::istringstream ngram_text("3 : 0.7\n4 : 0.4\n3 4 : 0.3\n3 3 : 0.2\n3 3 4 : 0.1\n");
  auto ngram = std::make_shared<NgramPosteriorTable>(load_ngram_posteriors(ngram_text));
  const std::vector<Token> pool{tok(3), tok(4), tok(5), tok(10)};
  return {
      {"fst", [=] { return std::make_unique<FstPredictor>(fst); }, pool},
      {"lm", [=] { return std::make_unique<LmPredictor>(lm); }, pool},
      {"lex", [=] { return std::make_unique<LexPredictor>(lex); }, pool},
      {"wc", [] { return std::make_unique<WordCountPredictor>(0.5); }, pool},
      {"ngram", [=] { return std::make_unique<NgramPosteriorPredictor>(ngram); }, pool},
  };
}

inline std::vector<std::string> check_contract(const ContractCase &c,
                                               std::uint64_t seed = 59) {
  std::vector<std::string> failures;
  auto fail = [&](const std::string &what) { failures.push_back(c.name + ": " + what); };
  const std::vector<Token> source{tok(3), tok(4)};
  const std::vector<Token> bos{kBos};
  Rng rng(seed);
  auto pick = [&] { return c.pool[rng.range(0, c.pool.size() - 1)]; };

  {
    auto p = c.make();
    p->initialize(source);
    if (p->history() != bos) fail("history after initialize is not [BOS]");
    p->consume(pick());
    p->initialize(source);
    if (p->history() != bos) fail("history after re-initialize is not [BOS]");
  }
  {
    auto p = c.make();
    p->initialize(source);
    for (int step = 0; step < 8; ++step) {
      const PredictorState before = p->get_state();
      if (!(p->predict_next() == p->predict_next())) fail("predict_next is not repeatable");
      if (p->get_state().history != before.history) fail("predict_next changed the history");
      p->consume(pick());
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    auto p = c.make();
    p->initialize(source);
    for (std::size_t i = 0, n = rng.range(0, 5); i < n; ++i) p->consume(pick());
    const PredictorState saved = p->get_state();
    const Posterior expect = p->predict_next();
    const auto history = p->history();
    for (std::size_t i = 0, n = rng.range(1, 5); i < n; ++i) p->consume(pick());
    p->set_state(saved);
    if (p->history() != history) fail("set_state did not restore the history");
    if (!(p->predict_next() == expect)) fail("set_state did not restore predict_next");
    auto twin = c.make();
    twin->initialize(source);
    twin->set_state(saved);
    const Token t = pick();
    p->consume(t);
    twin->consume(t);
    if (!(p->predict_next() == twin->predict_next()))
      fail("restored states diverge after the same consume");
    const Posterior now = p->predict_next();
    p->set_state(p->get_state());
    if (!(p->predict_next() == now)) fail("set_state(get_state()) is not the identity");
  }
  return failures;
}

}  // namespace ensdec::testing

#endif  // ENSDEC_TESTS_CONTRACT_H_
