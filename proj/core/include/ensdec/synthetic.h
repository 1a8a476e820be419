// synthetic.h
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

#ifndef ENSDEC_SYNTHETIC_H_
#define ENSDEC_SYNTHETIC_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ensdec/automaton.h"
#include "ensdec/random.h"

namespace ensdec {

struct ArpaSpec {
  int order = 2;
  // Corpus tokens (ids >= 3); EOS is always added to the vocabulary.
  std::vector<Token> words;
  bool with_unk = false;
  // Fraction of possible contexts that get explicit successors.
  double context_density = 0.5;
};

// ARPA text of a backoff model whose conditional distributions sum to one
// for every history (backoff weights are solved for, not sampled).
std::string random_arpa(const ArpaSpec &spec, Rng &rng);

struct LatticeSpec {
  std::size_t layers = 10;
  std::size_t max_width = 4;
  std::size_t max_out_degree = 3;
  std::uint32_t vocab_size = 20;
  Cost max_arc_cost = 3.0;
};

// Layered deterministic DAG in which every state reaches a final state.
WeightedAutomaton random_layered_lattice(const LatticeSpec &spec, Rng &rng);

struct SyntheticSuiteSpec {
  std::size_t sentences = 100;
  std::uint64_t seed = 20180917;
  LatticeSpec lattice;
};

// Writes src.txt, lat/<id>.fst.txt, lm.arpa and analyze.conf into dir: a
// lattice-rescoring workload whose bigram LM is drawn independently of
// the lattice weights.
void write_synthetic_suite(const std::filesystem::path &dir,
                           const SyntheticSuiteSpec &spec);

}  // namespace ensdec

#endif  // ENSDEC_SYNTHETIC_H_
