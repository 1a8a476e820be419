// automaton.cc
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

#include "ensdec/automaton.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include "ensdec/errors.h"
#include "text_util.h"

namespace ensdec {

StateId WeightedAutomaton::add_state() {
  arcs_.emplace_back();
  return static_cast<StateId>(arcs_.size() - 1);
}

void WeightedAutomaton::add_states(std::size_t n) {
  arcs_.resize(arcs_.size() + n);
}

void WeightedAutomaton::set_start(StateId s) {
  if (s >= num_states()) throw std::out_of_range("start state out of range");
  start_ = s;
}

void WeightedAutomaton::add_arc(StateId from, Arc arc) {
  if (from >= num_states() || arc.next_state >= num_states())
    throw std::out_of_range("arc endpoint out of range");
  arcs_[from].push_back(arc);
}

void WeightedAutomaton::set_final(StateId s, Cost weight) {
  if (s >= num_states()) throw std::out_of_range("final state out of range");
  finals_[s] = weight;
}

std::size_t WeightedAutomaton::num_arcs() const {
  std::size_t n = 0;
  for (const auto &a : arcs_) n += a.size();
  return n;
}

Cost WeightedAutomaton::final_weight(StateId s) const {
  auto it = finals_.find(s);
  return it == finals_.end() ? kInfCost : it->second;
}

Cost WeightedAutomaton::min_weight() const {
  Cost m = kInfCost;
  for (const auto &state_arcs : arcs_)
    for (const auto &arc : state_arcs) m = std::min(m, arc.weight);
  for (const auto &[s, w] : finals_) m = std::min(m, w);
  return m;
}

namespace {

struct RawLine {
  std::size_t lineno;
  bool is_arc;
  long long src;
  long long dst;
  std::uint32_t label;
  Cost weight;
};

long long parse_state(std::string_view field, const std::string &source,
                      std::size_t lineno) {
  long long v = 0;
  if (!internal::parse_number(field, v))
    throw ParseError(source, lineno,
                     "invalid state id '" + std::string(field) + "'");
  if (v < 0)
    throw ParseError(source, lineno,
                     "negative state id '" + std::string(field) + "'");
  return v;
}

Cost parse_weight(std::string_view field, const std::string &source,
                  std::size_t lineno) {
  double v = 0;
  if (!internal::parse_number(field, v) || !std::isfinite(v))
    throw ParseError(source, lineno,
                     "invalid weight '" + std::string(field) + "'");
  return v;
}

}  // namespace

WeightedAutomaton load_att(std::istream &in, const std::string &source,
                           const AttOptions &options) {
  std::vector<RawLine> lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = internal::split_ws(line);
    if (fields.empty()) continue;
    RawLine raw{lineno, false, 0, 0, 0, 0.0};
    if (fields.size() <= 2) {
      raw.src = parse_state(fields[0], source, lineno);
      if (fields.size() == 2) {
        double w = 0;
        // A final line with an infinite weight only mentions the state.
        if (internal::parse_number(fields[1], w) && std::isinf(w) && w > 0)
          raw.weight = kInfCost;
        else
          raw.weight = parse_weight(fields[1], source, lineno);
      }
    } else if (fields.size() <= 4) {
      raw.is_arc = true;
      raw.src = parse_state(fields[0], source, lineno);
      raw.dst = parse_state(fields[1], source, lineno);
      if (!internal::parse_number(fields[2], raw.label))
        throw ParseError(source, lineno,
                         "invalid label '" + std::string(fields[2]) + "'");
      if (make_token(raw.label) == kEos && !options.allow_eos_labels)
        throw ParseError(source, lineno,
                         "EOS may not label an arc; use a final weight");
      if (fields.size() == 4) raw.weight = parse_weight(fields[3], source, lineno);
    } else {
      throw ParseError(source, lineno, "expected 1-4 fields, got " +
                                           std::to_string(fields.size()));
    }
    lines.push_back(raw);
  }
  if (lines.empty()) throw ParseError(source, lineno, "no start state");

  // First-mention order of state ids.
  std::vector<long long> order;
  std::unordered_map<long long, StateId> ids;
  auto mention = [&](long long s) {
    if (ids.emplace(s, 0).second) order.push_back(s);
  };
  for (const auto &raw : lines) {
    mention(raw.src);
    if (raw.is_arc) mention(raw.dst);
  }
  const long long max_id = *std::max_element(order.begin(), order.end());
  const bool dense = max_id + 1 == static_cast<long long>(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    ids[order[i]] = dense ? static_cast<StateId>(order[i])
                          : static_cast<StateId>(i);

  WeightedAutomaton a;
  a.add_states(order.size());
  a.set_start(ids[lines.front().src]);
  for (const auto &raw : lines) {
    if (raw.is_arc) {
      a.add_arc(ids[raw.src], Arc{make_token(raw.label), ids[raw.dst], raw.weight});
    } else if (!std::isinf(raw.weight)) {
      if (a.is_final(ids[raw.src]))
        throw ParseError(source, raw.lineno, "state " + std::to_string(raw.src) +
                                                 " listed as final twice");
      a.set_final(ids[raw.src], raw.weight);
    }
  }
  return a;
}

WeightedAutomaton load_att_file(const std::string &path,
                                const AttOptions &options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open automaton " + path);
  return load_att(in, path, options);
}

void write_att(const WeightedAutomaton &a, std::ostream &out) {
  if (a.num_states() == 0) return;
  // The start state is emitted first so that a reader recovers it.
  std::vector<StateId> order{a.start()};
  for (StateId s = 0; s < a.num_states(); ++s)
    if (s != a.start()) order.push_back(s);
  auto write_final = [&](StateId s, Cost w) {
    out << s;
    if (w != 0.0) out << ' ' << format_cost(w);
    out << '\n';
  };
  // Without arcs the start state must still be mentioned first; a
  // non-final one is written with an infinite final weight.
  const bool start_line = a.arcs(a.start()).empty();
  if (start_line) write_final(a.start(), a.final_weight(a.start()));
  for (StateId s : order)
    for (const auto &arc : a.arcs(s))
      out << s << ' ' << arc.next_state << ' ' << to_int(arc.label) << ' '
          << format_cost(arc.weight) << '\n';
  if (a.finals().empty()) {
    std::cerr << "WARNING: writing automaton without final states\n";
    return;
  }
  if (!start_line && a.is_final(a.start()))
    write_final(a.start(), a.final_weight(a.start()));
  for (const auto &[s, w] : a.finals())
    if (s != a.start()) write_final(s, w);
}

std::string write_att(const WeightedAutomaton &a) {
  std::ostringstream out;
  write_att(a, out);
  return out.str();
}

std::optional<DeterminismViolation> validate_deterministic(
    const WeightedAutomaton &a) {
  for (StateId s = 0; s < a.num_states(); ++s) {
    std::set<Token> seen;
    for (const auto &arc : a.arcs(s))
      if (!seen.insert(arc.label).second)
        return DeterminismViolation{s, arc.label};
  }
  return std::nullopt;
}

Cost shortest_cost(const WeightedAutomaton &a) {
  if (a.num_states() == 0) return kInfCost;
  if (a.min_weight() < 0)
    throw ConfigError("shortest_cost requires non-negative weights");
  std::vector<Cost> dist(a.num_states(), kInfCost);
  using Entry = std::pair<Cost, StateId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[a.start()] = 0.0;
  queue.emplace(0.0, a.start());
  Cost best = kInfCost;
  while (!queue.empty()) {
    auto [d, s] = queue.top();
    queue.pop();
    if (d > dist[s]) continue;
    if (d >= best) break;
    best = std::min(best, d + a.final_weight(s));
    for (const auto &arc : a.arcs(s)) {
      const Cost nd = d + arc.weight;
      if (nd < dist[arc.next_state]) {
        dist[arc.next_state] = nd;
        queue.emplace(nd, arc.next_state);
      }
    }
  }
  return best;
}

}  // namespace ensdec
