// automaton.h
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

#ifndef ENSDEC_AUTOMATON_H_
#define ENSDEC_AUTOMATON_H_

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ensdec/types.h"

namespace ensdec {

struct Arc {
  Token label;
  StateId next_state;
  Cost weight;
};

// Epsilon-free weighted acceptor over target tokens with tropical costs.
// End of sequence is represented by final weights, never by an EOS arc
// (hypothesis lattices are the exception, see output.h).
class WeightedAutomaton {
 public:
  WeightedAutomaton() = default;

  StateId add_state();
  void add_states(std::size_t n);
  void set_start(StateId s);
  void add_arc(StateId from, Arc arc);
  void set_final(StateId s, Cost weight);

  std::size_t num_states() const { return arcs_.size(); }
  std::size_t num_arcs() const;
  StateId start() const { return start_; }
  const std::vector<Arc> &arcs(StateId s) const { return arcs_.at(s); }
  const std::map<StateId, Cost> &finals() const { return finals_; }
  bool is_final(StateId s) const { return finals_.count(s) != 0; }
  // +inf for non-final states.
  Cost final_weight(StateId s) const;

  // Smallest arc or final weight; +inf for an empty automaton.
  Cost min_weight() const;

 private:
  StateId start_ = 0;
  std::vector<std::vector<Arc>> arcs_;
  std::map<StateId, Cost> finals_;
};

struct AttOptions {
  // Hypothesis lattices carry explicit EOS arcs; plain acceptors may not.
  bool allow_eos_labels = false;
};

// Reads AT&T-style acceptor text: "src dst label [weight]" arc lines and
// "state [weight]" final lines. The first line's source is the start state.
// Non-dense state ids are renumbered in order of first mention. Throws
// ParseError (with line number) on malformed input or an EOS arc label.
WeightedAutomaton load_att(std::istream &in, const std::string &source = "fst",
                           const AttOptions &options = {});
WeightedAutomaton load_att_file(const std::string &path,
                                const AttOptions &options = {});

// Arcs in state order, then final lines. Weights use six decimals; a final
// weight of exactly 0 is omitted. Warns on stderr when nothing is final.
void write_att(const WeightedAutomaton &a, std::ostream &out);
std::string write_att(const WeightedAutomaton &a);

struct DeterminismViolation {
  StateId state;
  Token label;
};

// First (state, label) pair that has two outgoing arcs, if any.
std::optional<DeterminismViolation> validate_deterministic(
    const WeightedAutomaton &a);

// Minimum over accepting paths of arc weights plus final weight, by a
// priority-first search. Returns +inf when no accepting path exists.
// Throws ConfigError if any weight is negative.
Cost shortest_cost(const WeightedAutomaton &a);

}  // namespace ensdec

#endif  // ENSDEC_AUTOMATON_H_
