// output.cc
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

#include "ensdec/output.h"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <set>

#include "ensdec/errors.h"

namespace ensdec {

std::string render_tokens(const std::vector<Token> &tokens,
                          const WordMap *wmap) {
  std::string out;
  for (Token t : tokens) {
    if (t == kEos) continue;
    if (!out.empty()) out += ' ';
    out += wmap ? wmap->surface(t) : std::to_string(to_int(t));
  }
  return out;
}

std::string write_text(const DecodeResult &result, const WordMap *wmap) {
  if (result.empty()) {
    std::cerr << "WARNING: no hypothesis to write, emitting an empty line\n";
    return "";
  }
  return render_tokens(result.best().tokens, wmap);
}

void write_nbest(const DecodeResult &result, std::size_t sentence_id,
                 const std::vector<std::string> &names, std::size_t nbest,
                 const WordMap *wmap, std::ostream &out) {
  std::size_t n = result.hypotheses.size();
  if (nbest > 0) n = std::min(n, nbest);
  for (std::size_t i = 0; i < n; ++i) {
    const Hypothesis &h = result.hypotheses[i];
    out << sentence_id << " ||| " << render_tokens(h.tokens, wmap) << " |||";
    for (std::size_t k = 0; k < h.breakdown.size(); ++k)
      out << ' ' << (k < names.size() ? names[k] : "p" + std::to_string(k))
          << "= " << format_cost(h.breakdown[k]);
    out << " ||| " << format_cost(h.total_cost) << '\n';
  }
}

HypothesisLattice build_hypothesis_lattice(const DecodeResult &result) {
  HypothesisLattice lattice;
  WeightedAutomaton &fsa = lattice.standard;
  TupleLattice &tuples = lattice.tuples;
  fsa.add_state();
  tuples.arcs.emplace_back();
  std::map<std::pair<StateId, Token>, StateId> children;
  for (const Hypothesis &h : result.hypotheses) {
    if (!std::isfinite(h.total_cost)) continue;
    StateId s = 0;
    for (std::size_t i = 0; i < h.tokens.size(); ++i) {
      auto [it, inserted] = children.try_emplace({s, h.tokens[i]}, 0);
      if (inserted) {
        it->second = fsa.add_state();
        tuples.arcs.emplace_back();
        fsa.add_arc(s, Arc{h.tokens[i], it->second, h.step_totals[i]});
        SparseTupleWeight w;
        for (std::size_t k = 0; k < h.step_costs[i].size(); ++k)
          if (h.step_costs[i][k] != 0.0) w.components[k] = h.step_costs[i][k];
        tuples.arcs[s].push_back(TupleArc{h.tokens[i], it->second, std::move(w)});
      }
      s = it->second;
    }
    fsa.set_final(s, 0.0);
    tuples.finals[s] = SparseTupleWeight{};
  }
  return lattice;
}

NgramPosteriorTable compute_ngram_posteriors(const DecodeResult &result,
                                             int max_order,
                                             bool occurrence_based) {
  if (max_order < 1 || max_order > 5)
    throw ConfigError("n-gram order must lie in 1..5");
  Cost min_cost = kInfCost;
  for (const auto &h : result.hypotheses)
    min_cost = std::min(min_cost, h.total_cost);
  if (!std::isfinite(min_cost))
    throw DataError("no finite-cost hypothesis to normalize n-gram posteriors");

  // Shifting by the best cost leaves the normalized values unchanged.
  double z = 0.0;
  std::map<Ngram, double> mass;
  for (const auto &h : result.hypotheses) {
    const double p = std::exp(-(h.total_cost - min_cost));
    if (p == 0.0) continue;
    z += p;
    std::vector<Token> words;
    for (Token t : h.tokens)
      if (t != kEos) words.push_back(t);
    std::map<Ngram, int> counts;
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t n = 1; n <= static_cast<std::size_t>(max_order) &&
                              i + n <= words.size();
           ++n)
        ++counts[Ngram(words.begin() + i, words.begin() + i + n)];
    for (const auto &[g, c] : counts)
      mass[g] += occurrence_based ? p * c : p;
  }
  NgramPosteriorTable table;
  for (const auto &[g, m] : mass) {
    double v = m / z;
    if (!occurrence_based) v = std::min(v, 1.0);
    table.post.emplace(g, v);
    table.max_order = std::max(table.max_order, static_cast<int>(g.size()));
  }
  return table;
}

}  // namespace ensdec
