// output.h
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

#ifndef ENSDEC_OUTPUT_H_
#define ENSDEC_OUTPUT_H_

#include <ostream>
#include <string>
#include <vector>

#include "ensdec/automaton.h"
#include "ensdec/ngram_posterior.h"
#include "ensdec/search.h"
#include "ensdec/sparse_tuple.h"
#include "ensdec/word_map.h"

namespace ensdec {

// Tokens without EOS, space-joined; ids are printed when wmap is null.
std::string render_tokens(const std::vector<Token> &tokens,
                          const WordMap *wmap);

// First-best translation as one line (without newline). An empty result
// yields "" and a warning on stderr.
std::string write_text(const DecodeResult &result, const WordMap *wmap);

// "<id> ||| <tokens> ||| <name>= <cost> ... ||| <total>" per hypothesis,
// best first, at most nbest lines (0 = all).
void write_nbest(const DecodeResult &result, std::size_t sentence_id,
                 const std::vector<std::string> &names, std::size_t nbest,
                 const WordMap *wmap, std::ostream &out);

// Prefix tree of the finite-cost complete hypotheses including their EOS
// arcs, states numbered in insertion order from root 0, final weight 0 on
// every leaf. `standard` carries combined step costs and `tuples` the
// per-predictor step costs of the same topology.
struct HypothesisLattice {
  WeightedAutomaton standard;
  TupleLattice tuples;
};

HypothesisLattice build_hypothesis_lattice(const DecodeResult &result);

// Posterior of every n-gram (order <= max_order, EOS excluded) under the
// distribution p(h) ~ exp(-total_cost(h)) over the result's hypotheses.
// Presence-based by default: an n-gram counts once per hypothesis; with
// occurrence_based it counts every occurrence (expected counts, which may
// exceed 1). The table's max_order is the longest n-gram found. Throws
// DataError if no hypothesis has finite cost and ConfigError if max_order
// is outside 1..5.
NgramPosteriorTable compute_ngram_posteriors(const DecodeResult &result,
                                             int max_order,
                                             bool occurrence_based = false);

}  // namespace ensdec

#endif  // ENSDEC_OUTPUT_H_
