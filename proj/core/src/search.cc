// search.cc
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

#include "ensdec/search.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ensdec/errors.h"

namespace ensdec {

namespace {

struct Candidate {
  Token token;
  Cost combined;
  std::vector<Cost> costs;
};

// Scores the successors of one partial hypothesis and counts the
// expansion. Candidates come back ordered by token id.
class Expander {
 public:
  Expander(PredictorSet &predictors, std::size_t max_len, SearchStats &stats)
      : predictors_(predictors), max_len_(max_len), stats_(stats) {}

  Hypothesis root() const {
    Hypothesis h = Hypothesis::empty(predictors_.size());
    h.states = predictors_.get_states();
    return h;
  }

  // Finite-cost candidates. At max_len only EOS is offered, at its true
  // (possibly infinite) cost; *forced is set in that case.
  std::vector<Candidate> expand(const Hypothesis &hyp, bool *forced) {
    ++stats_.expansions;
    predictors_.set_states(hyp.states);
    const auto posteriors = predictors_.predict_next();
    const bool at_limit = hyp.length() >= max_len_;
    std::vector<Candidate> out;
    const auto combined =
        at_limit ? combine(posteriors, predictors_.weights(), {kEos})
                 : combine(posteriors, predictors_.weights(),
                           candidate_tokens(posteriors));
    for (const auto &[t, c] : combined) {
      if (std::isinf(c) && c > 0) continue;
      Candidate cand{t, c, {}};
      cand.costs.reserve(posteriors.size());
      for (const auto &p : posteriors) cand.costs.push_back(p.lookup(t));
      out.push_back(std::move(cand));
    }
    *forced = at_limit;
    if (at_limit && out.empty()) out.push_back(eos_candidate(posteriors));
    return out;
  }

  // EOS at its true cost, used when nothing finite is left.
  Candidate eos_candidate(const std::vector<Posterior> &posteriors) const {
    Candidate cand{kEos, 0.0, {}};
    for (const auto &p : posteriors) cand.costs.push_back(p.lookup(kEos));
    cand.combined = weighted_sum(predictors_.weights(), cand.costs);
    return cand;
  }

  std::vector<Posterior> posteriors_of(const Hypothesis &hyp) {
    predictors_.set_states(hyp.states);
    return predictors_.predict_next();
  }

  Hypothesis child(const Hypothesis &hyp, const Candidate &cand) {
    Hypothesis c = extend(hyp, cand.token, cand.costs, predictors_.weights());
    if (cand.token == kEos) {
      ++stats_.completes;
      if (std::isinf(c.total_cost)) stats_.dead_end = true;
    } else {
      predictors_.set_states(hyp.states);
      predictors_.consume(cand.token);
      c.states = predictors_.get_states();
    }
    return c;
  }

 private:
  PredictorSet &predictors_;
  std::size_t max_len_;
  SearchStats &stats_;
};

void finish(DecodeResult &result) {
  std::sort(result.hypotheses.begin(), result.hypotheses.end(),
            hypothesis_less);
  result.stats.best_cost =
      result.hypotheses.empty() ? kInfCost : result.hypotheses.front().total_cost;
}

}  // namespace

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "greedy") return Strategy::kGreedy;
  if (name == "beam") return Strategy::kBeam;
  if (name == "dfs") return Strategy::kDfs;
  if (name == "exhaustive") return Strategy::kExhaustive;
  return std::nullopt;
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kGreedy: return "greedy";
    case Strategy::kBeam: return "beam";
    case Strategy::kDfs: return "dfs";
    case Strategy::kExhaustive: return "exhaustive";
  }
  return "unknown";
}

std::size_t max_len_for(std::size_t src_len, double factor, std::size_t offset) {
  return static_cast<std::size_t>(factor * static_cast<double>(src_len)) +
         offset;
}

DecodeResult greedy_decode(PredictorSet &predictors, std::size_t max_len) {
  DecodeResult result;
  Expander expander(predictors, max_len, result.stats);
  Hypothesis hyp = expander.root();
  while (!hyp.complete()) {
    bool forced = false;
    auto cands = expander.expand(hyp, &forced);
    const Candidate *pick = nullptr;
    for (const auto &c : cands)  // token order, so strict < keeps lowest id
      if (!pick || hyp.total_cost + c.combined < hyp.total_cost + pick->combined)
        pick = &c;
    if (!pick) {
      const auto eos = expander.eos_candidate(expander.posteriors_of(hyp));
      hyp = expander.child(hyp, eos);
    } else {
      hyp = expander.child(hyp, *pick);
    }
  }
  result.hypotheses.push_back(std::move(hyp));
  finish(result);
  return result;
}

DecodeResult beam_decode(PredictorSet &predictors, std::size_t beam,
                         std::size_t max_len) {
  if (beam < 1) throw ConfigError("beam size must be at least 1");
  DecodeResult result;
  Expander expander(predictors, max_len, result.stats);
  std::vector<Hypothesis> slots{expander.root()};
  auto all_complete = [&] {
    return std::all_of(slots.begin(), slots.end(),
                       [](const Hypothesis &h) { return h.complete(); });
  };
  while (!slots.empty() && !all_complete()) {
    std::vector<Hypothesis> pool;
    for (auto &hyp : slots) {
      if (hyp.complete()) {
        pool.push_back(std::move(hyp));
        continue;
      }
      bool forced = false;
      auto cands = expander.expand(hyp, &forced);
      if (cands.empty()) {
        pool.push_back(
            expander.child(hyp, expander.eos_candidate(expander.posteriors_of(hyp))));
        continue;
      }
      for (const auto &c : cands) pool.push_back(expander.child(hyp, c));
    }
    const std::size_t keep = std::min(beam, pool.size());
    std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(keep),
                      pool.end(), hypothesis_less);
    pool.resize(keep);
    slots = std::move(pool);
  }
  for (auto &hyp : slots) {
    hyp.states.clear();
    result.hypotheses.push_back(std::move(hyp));
  }
  finish(result);
  return result;
}

void check_admissible(const PredictorSet &predictors) {
  for (std::size_t k = 0; k < predictors.size(); ++k) {
    const double w = predictors.weights()[k];
    if (w < 0)
      throw ConfigError("predictor '" + predictors.names()[k] +
                        "' has a negative weight; dfs needs admissible pruning");
    if (w != 0 && !predictors.at(k).admissible())
      throw ConfigError("predictor '" + predictors.names()[k] +
                        "' can produce negative costs; dfs needs admissible "
                        "pruning");
  }
}

namespace {

class DepthFirst {
 public:
  DepthFirst(Expander &expander, std::optional<Hypothesis> &best)
      : expander_(expander), best_(best) {}

  void visit(const Hypothesis &hyp) {
    bool forced = false;
    auto cands = expander_.expand(hyp, &forced);
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate &a, const Candidate &b) {
                       return a.combined < b.combined;
                     });
    for (const auto &c : cands) {
      if (std::isinf(c.combined)) break;
      // Siblings are ordered by cost, so everything after c is pruned too.
      if (best_ && hyp.total_cost + c.combined > best_->total_cost) break;
      Hypothesis child = expander_.child(hyp, c);
      if (child.complete()) {
        if (!best_ || hypothesis_less(child, *best_)) best_ = std::move(child);
      } else {
        visit(child);
      }
    }
  }

 private:
  Expander &expander_;
  std::optional<Hypothesis> &best_;
};

class Enumerator {
 public:
  Enumerator(Expander &expander, const SearchStats &stats,
             std::uint64_t budget, std::vector<Hypothesis> &out)
      : expander_(expander), stats_(stats), budget_(budget), out_(out) {}

  void visit(const Hypothesis &hyp) {
    if (stats_.expansions >= budget_)
      throw ConfigError("exhaustive enumeration exceeds the budget of " +
                        std::to_string(budget_) + " expansions");
    bool forced = false;
    auto cands = expander_.expand(hyp, &forced);
    for (const auto &c : cands) {
      if (std::isinf(c.combined)) continue;
      Hypothesis child = expander_.child(hyp, c);
      if (child.complete())
        out_.push_back(std::move(child));
      else
        visit(child);
    }
  }

 private:
  Expander &expander_;
  const SearchStats &stats_;
  std::uint64_t budget_;
  std::vector<Hypothesis> &out_;
};

}  // namespace

DecodeResult dfs_decode(PredictorSet &predictors, std::size_t max_len) {
  check_admissible(predictors);
  DecodeResult result;
  Expander expander(predictors, max_len, result.stats);
  std::optional<Hypothesis> best;
  DepthFirst(expander, best).visit(expander.root());
  if (best) result.hypotheses.push_back(std::move(*best));
  finish(result);
  return result;
}

DecodeResult exhaustive_decode(PredictorSet &predictors, std::size_t max_len,
                               std::uint64_t expansion_budget) {
  DecodeResult result;
  Expander expander(predictors, max_len, result.stats);
  const Hypothesis root = expander.root();

  bool bounded = false;
  for (std::size_t k = 0; k < predictors.size(); ++k)
    bounded |= predictors.weights()[k] != 0 && predictors.at(k).bounds_support();
  if (!bounded) {
    const auto posteriors = expander.posteriors_of(root);
    const double branching =
        static_cast<double>(candidate_tokens(posteriors).size());
    const double estimate = std::pow(branching, static_cast<double>(max_len));
    if (estimate > static_cast<double>(expansion_budget))
      throw ConfigError("exhaustive enumeration refused: about " +
                        std::to_string(static_cast<long double>(estimate)) +
                        " hypotheses exceed the budget of " +
                        std::to_string(expansion_budget));
  }
  Enumerator(expander, result.stats, expansion_budget, result.hypotheses)
      .visit(root);
  finish(result);
  return result;
}

DecodeResult decode(PredictorSet &predictors, const SearchConfig &config) {
  switch (config.strategy) {
    case Strategy::kGreedy:
      return greedy_decode(predictors, config.max_len);
    case Strategy::kBeam:
      return beam_decode(predictors, config.beam, config.max_len);
    case Strategy::kDfs:
      return dfs_decode(predictors, config.max_len);
    case Strategy::kExhaustive:
      return exhaustive_decode(predictors, config.max_len,
                               config.expansion_budget);
  }
  throw std::logic_error("unknown strategy");
}

bool count_search_errors(const DecodeResult &decoder, const DecodeResult &exact) {
  if (decoder.empty() || exact.empty())
    throw std::invalid_argument("search error check needs two non-empty results");
  return decoder.best().total_cost > exact.best().total_cost + 1e-9;
}

}  // namespace ensdec
