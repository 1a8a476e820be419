// instances.h
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

#ifndef ENSDEC_TESTS_INSTANCES_H_
#define ENSDEC_TESTS_INSTANCES_H_

// Random decoding instances and small fixtures shared by the test suites.

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ensdec/arpa.h"
#include "ensdec/automaton.h"
#include "ensdec/ensemble.h"
#include "ensdec/fst_predictor.h"
#include "ensdec/lex_predictor.h"
#include "ensdec/random.h"
#include "ensdec/synthetic.h"
#include "ensdec/word_count_predictor.h"

namespace ensdec::testing {

inline Token tok(std::uint32_t id) { return make_token(id); }

inline WeightedAutomaton parse_att(const std::string &text) {
  std::istringstream in(text);
  return load_att(in);
}

inline ArpaModel parse_arpa(const std::string &text) {
  std::istringstream in(text);
  return ArpaModel::load(in);
}

// 0 --3:0.5--> 1, final(1) = 0.2
inline WeightedAutomaton chain_fixture() { return parse_att("0 1 3 0.5\n1 0.2\n"); }

// Serves a fixed posterior per position; the last one repeats.
class ScriptedPredictor : public Predictor {
 public:
  explicit ScriptedPredictor(std::vector<Posterior> steps) : steps_(std::move(steps)) {}
  std::string kind() const override { return "scripted"; }

 protected:
  void do_initialize(std::span<const Token>) override { pos_ = 0; }
  Posterior do_predict_next() const override {
    return steps_[std::min(pos_, steps_.size() - 1)];
  }
  void do_consume(Token) override { ++pos_; }
  std::any do_get_state() const override { return pos_; }
  void do_set_state(const std::any &s) override { pos_ = std::any_cast<std::size_t>(s); }

 private:
  std::vector<Posterior> steps_;
  std::size_t pos_ = 0;
};

// Deterministic automaton with up to 8 states over up to 6 labels (ids
// 3..3+labels-1), possibly cyclic.
inline WeightedAutomaton random_automaton(Rng &rng, std::size_t max_states = 8,
                                          std::size_t max_labels = 6,
                                          std::size_t max_degree = 3) {
  WeightedAutomaton a;
  const std::size_t n = rng.range(2, max_states);
  const std::size_t labels = rng.range(2, max_labels);
  a.add_states(n);
  a.set_start(0);
  for (StateId s = 0; s < n; ++s) {
    std::vector<std::uint32_t> pool;
    for (std::uint32_t l = 0; l < labels; ++l) pool.push_back(kFirstCorpusId + l);
    const std::size_t degree = rng.range(0, std::min(max_degree, labels));
    for (std::size_t d = 0; d < degree; ++d) {
      const std::size_t pick = rng.range(0, pool.size() - 1);
      const Token label = make_token(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
      a.add_arc(s, Arc{label, static_cast<StateId>(rng.range(0, n - 1)),
                       rng.uniform(0.0, 3.0)});
    }
    if (rng.bernoulli(0.4)) a.set_final(s, rng.uniform(0.0, 2.0));
  }
  if (a.finals().empty()) a.set_final(static_cast<StateId>(n - 1), rng.uniform(0.0, 2.0));
  return a;
}

// Acyclic variant: arcs only go to higher state ids. With on_grid, weights
// are multiples of 1e-6 and survive the 6-decimal text format unchanged.
inline WeightedAutomaton random_acyclic_automaton(Rng &rng,
                                                  std::size_t max_states = 8,
                                                  bool on_grid = false) {
  auto weight = [&](double hi) {
    if (!on_grid) return rng.uniform(0.0, hi);
    return static_cast<double>(rng.range(0, static_cast<std::uint64_t>(hi * 1e6))) / 1e6;
  };
  WeightedAutomaton a;
  const std::size_t n = rng.range(2, max_states);
  a.add_states(n);
  a.set_start(0);
  for (StateId s = 0; s + 1 < n; ++s) {
    const std::size_t degree = rng.range(0, 3);
    std::uint32_t label = kFirstCorpusId + static_cast<std::uint32_t>(rng.range(0, 3));
    for (std::size_t d = 0; d < degree; ++d) {
      a.add_arc(s, Arc{make_token(label), static_cast<StateId>(rng.range(s + 1, n - 1)),
                       weight(3.0)});
      label += 1 + static_cast<std::uint32_t>(rng.range(0, 2));
    }
    if (rng.bernoulli(0.3)) a.set_final(s, weight(2.0));
  }
  a.set_final(static_cast<StateId>(n - 1), weight(2.0));
  return a;
}

// Number of arcs on the shortest accepting path, or -1.
inline int shortest_accepting_length(const WeightedAutomaton &a) {
  std::vector<int> depth(a.num_states(), -1);
  std::vector<StateId> frontier{a.start()};
  depth[a.start()] = 0;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const StateId s = frontier[i];
    if (a.is_final(s)) return depth[s];
    for (const auto &arc : a.arcs(s))
      if (depth[arc.next_state] < 0) {
        depth[arc.next_state] = depth[s] + 1;
        frontier.push_back(arc.next_state);
      }
  }
  return -1;
}

inline std::shared_ptr<const ArpaModel> random_lm(Rng &rng, std::size_t labels,
                                                  int order) {
  ArpaSpec spec;
  spec.order = order;
  for (std::uint32_t l = 0; l < labels; ++l)
    spec.words.push_back(make_token(kFirstCorpusId + l));
  return std::make_shared<ArpaModel>(parse_arpa(random_arpa(spec, rng)));
}

inline std::shared_ptr<const LexTable> random_lex(Rng &rng, std::size_t sources,
                                                  std::size_t labels) {
  auto table = std::make_shared<LexTable>();
  for (std::uint32_t s = 0; s < sources; ++s) {
    double left = 1.0;
    for (std::uint32_t l = 0; l < labels; ++l) {
      if (!rng.bernoulli(0.6)) continue;
      const double p = left * rng.uniform(0.05, 0.6);
      if (p <= 0) continue;
      table->add(make_token(kFirstCorpusId + s), make_token(kFirstCorpusId + l), p);
      left -= p;
    }
  }
  return table;
}

// A fully configured and initialized decoding problem.
struct Instance {
  std::shared_ptr<const WeightedAutomaton> fst;
  std::shared_ptr<const ArpaModel> lm;
  std::shared_ptr<const LexTable> lex;
  std::vector<double> weights;
  double wc_penalty = 0.0;
  std::vector<Token> source;
  std::size_t max_len = 0;

  PredictorSet predictors() const {
    PredictorSet set;
    set.add("fst", std::make_unique<FstPredictor>(fst), weights[0]);
    set.add("lm", std::make_unique<LmPredictor>(lm), weights[1]);
    set.add("lex", std::make_unique<LexPredictor>(lex), weights[2]);
    set.add("wc", std::make_unique<WordCountPredictor>(wc_penalty), weights[3]);
    set.initialize(source);
    return set;
  }
};

// Deterministic automaton (<= 8 states, <= 6 labels) combined with a random
// LM, lexical table and word-count penalty. Some accepting path fits into
// max_len (<= 10), and the node count of full enumeration stays small.
inline Instance random_instance(Rng &rng) {
  Instance inst;
  WeightedAutomaton a;
  for (;;) {
    const bool long_run = rng.bernoulli(0.5);
    inst.max_len = long_run ? rng.range(7, 10) : rng.range(3, 6);
    a = random_automaton(rng, 8, 6, long_run ? 2 : 3);
    const int shortest = shortest_accepting_length(a);
    if (shortest >= 0 && static_cast<std::size_t>(shortest) <= inst.max_len) break;
  }
  inst.fst = std::make_shared<WeightedAutomaton>(a);
  inst.lm = random_lm(rng, 6, static_cast<int>(rng.range(1, 3)));
  inst.lex = random_lex(rng, 4, 6);
  inst.weights = {rng.uniform(0.2, 1.5), rng.uniform(0.2, 1.5),
                  rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
  inst.wc_penalty = rng.uniform(0.0, 1.0);
  const std::size_t len = rng.range(1, 3);
  for (std::size_t i = 0; i < len; ++i)
    inst.source.push_back(make_token(kFirstCorpusId + static_cast<std::uint32_t>(rng.range(0, 3))));
  return inst;
}

}  // namespace ensdec::testing

#endif  // ENSDEC_TESTS_INSTANCES_H_
