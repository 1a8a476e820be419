// synthetic.cc
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

#include "ensdec/synthetic.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "ensdec/arpa.h"
#include "ensdec/errors.h"

namespace ensdec {

namespace fs = std::filesystem;

namespace {

std::string arpa_word(Token t) {
  if (t == kBos) return "<s>";
  if (t == kEos) return "</s>";
  if (t == kUnk) return "<unk>";
  return std::to_string(to_int(t));
}

std::string log10_text(double p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", std::log10(p));
  return buf;
}

// Natural-probability backoff model under construction.
struct ProbModel {
  std::map<Ngram, double> prob;
  std::map<Ngram, double> backoff;

  double conditional(const Ngram &ctx, Token w) const {
    Ngram g = ctx;
    g.push_back(w);
    if (auto it = prob.find(g); it != prob.end()) return it->second;
    if (ctx.empty()) return 0.0;
    double bo = 1.0;
    if (auto it = backoff.find(ctx); it != backoff.end()) bo = it->second;
    return bo * conditional(Ngram(ctx.begin() + 1, ctx.end()), w);
  }
};

}  // namespace

std::string random_arpa(const ArpaSpec &spec, Rng &rng) {
  if (spec.order < 1 || spec.order > ArpaModel::kMaxOrder)
    throw ConfigError("ARPA order must lie in 1..5");
  std::vector<Token> vocab(spec.words);
  vocab.push_back(kEos);
  if (spec.with_unk) vocab.push_back(kUnk);
  std::sort(vocab.begin(), vocab.end());
  vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());

  ProbModel model;
  {
    std::vector<double> weights;
    for (std::size_t i = 0; i < vocab.size(); ++i)
      weights.push_back(rng.uniform(0.05, 1.0));
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (std::size_t i = 0; i < vocab.size(); ++i)
      model.prob[Ngram{vocab[i]}] = weights[i] / total;
  }

  // n-grams listed at the previous level that may serve as contexts.
  std::vector<Ngram> contexts{Ngram{kBos}};
  for (Token w : vocab)
    if (w != kEos) contexts.push_back(Ngram{w});
  std::vector<std::vector<Ngram>> listed(spec.order + 1);
  for (int n = 2; n <= spec.order; ++n) {
    std::vector<Ngram> next_contexts;
    for (const Ngram &ctx : contexts) {
      if (ctx != Ngram{kBos} && !rng.bernoulli(spec.context_density)) continue;
      std::vector<Token> successors;
      for (Token w : vocab)
        if (rng.bernoulli(0.4)) successors.push_back(w);
      if (successors.empty()) successors.push_back(vocab[rng.range(0, vocab.size() - 1)]);
      if (successors.size() == vocab.size()) successors.pop_back();

      const Ngram lower(ctx.begin() + 1, ctx.end());
      double lower_mass = 0.0;
      for (Token w : successors) lower_mass += model.conditional(lower, w);
      const double mass = rng.uniform(0.5, 0.95);
      std::vector<double> weights;
      for (std::size_t i = 0; i < successors.size(); ++i)
        weights.push_back(rng.uniform(0.1, 1.0));
      const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
      for (std::size_t i = 0; i < successors.size(); ++i) {
        Ngram g = ctx;
        g.push_back(successors[i]);
        model.prob[g] = mass * weights[i] / total;
        listed[n].push_back(g);
        if (successors[i] != kEos) next_contexts.push_back(g);
      }
      model.backoff[ctx] = (1.0 - mass) / (1.0 - lower_mass);
    }
    contexts = std::move(next_contexts);
  }

  std::map<int, std::vector<std::pair<Ngram, double>>> by_order;
  by_order[1].emplace_back(Ngram{kBos}, 0.0);
  for (const auto &[g, p] : model.prob)
    by_order[static_cast<int>(g.size())].emplace_back(g, p);
  for (auto &[n, rows] : by_order) std::sort(rows.begin(), rows.end());

  std::string out = "\\data\\\n";
  for (int n = 1; n <= spec.order; ++n)
    out += "ngram " + std::to_string(n) + "=" +
           std::to_string(by_order[n].size()) + "\n";
  for (int n = 1; n <= spec.order; ++n) {
    out += "\n\\" + std::to_string(n) + "-grams:\n";
    for (const auto &[g, p] : by_order[n]) {
      out += g == Ngram{kBos} ? std::string("-99") : log10_text(p);
      for (Token t : g) out += " " + arpa_word(t);
      if (auto it = model.backoff.find(g); it != model.backoff.end())
        out += " " + log10_text(it->second);
      out += "\n";
    }
  }
  out += "\n\\end\\\n";
  return out;
}

WeightedAutomaton random_layered_lattice(const LatticeSpec &spec, Rng &rng) {
  WeightedAutomaton a;
  std::vector<std::vector<StateId>> layers{{a.add_state()}};
  a.set_start(0);
  for (std::size_t l = 1; l <= spec.layers; ++l) {
    std::vector<StateId> layer;
    const std::size_t width = rng.range(1, spec.max_width);
    for (std::size_t i = 0; i < width; ++i) layer.push_back(a.add_state());
    layers.push_back(layer);
  }
  auto random_label = [&](std::set<Token> &used) {
    for (;;) {
      const Token t = make_token(kFirstCorpusId +
                                 static_cast<std::uint32_t>(rng.range(0, spec.vocab_size - 1)));
      if (used.insert(t).second) return t;
    }
  };
  for (std::size_t l = 0; l < spec.layers; ++l) {
    const auto &from = layers[l];
    const auto &to = layers[l + 1];
    std::vector<std::set<Token>> used(from.size());
    std::vector<bool> reached(to.size(), false);
    for (std::size_t i = 0; i < from.size(); ++i) {
      const std::size_t degree = rng.range(
          1, std::min<std::size_t>(spec.max_out_degree, spec.vocab_size));
      for (std::size_t d = 0; d < degree; ++d) {
        const std::size_t j = rng.range(0, to.size() - 1);
        reached[j] = true;
        a.add_arc(from[i], Arc{random_label(used[i]), to[j],
                               rng.uniform(0.0, spec.max_arc_cost)});
      }
    }
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (reached[j]) continue;
      const std::size_t i = rng.range(0, from.size() - 1);
      if (used[i].size() >= spec.vocab_size) continue;
      a.add_arc(from[i], Arc{random_label(used[i]), to[j],
                             rng.uniform(0.0, spec.max_arc_cost)});
    }
  }
  for (StateId s : layers.back()) a.set_final(s, rng.uniform(0.0, 1.0));
  return a;
}

void write_synthetic_suite(const fs::path &dir, const SyntheticSuiteSpec &spec) {
  std::error_code ec;
  fs::create_directories(dir / "lat", ec);
  if (ec) throw DataError("cannot create " + (dir / "lat").string());
  Rng rng(spec.seed);
  auto write = [](const fs::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << content;
  };

  std::string src;
  for (std::size_t i = 1; i <= spec.sentences; ++i) {
    const std::size_t len = rng.range(2, 4);
    for (std::size_t k = 0; k < len; ++k) {
      if (k) src += ' ';
      src += std::to_string(kFirstCorpusId + rng.range(0, spec.lattice.vocab_size - 1));
    }
    src += '\n';
    const auto lattice = random_layered_lattice(spec.lattice, rng);
    write(dir / "lat" / (std::to_string(i) + ".fst.txt"), write_att(lattice));
  }
  write(dir / "src.txt", src);

  ArpaSpec lm;
  lm.order = 2;
  lm.context_density = 0.8;
  for (std::uint32_t v = 0; v < spec.lattice.vocab_size; ++v)
    lm.words.push_back(make_token(kFirstCorpusId + v));
  write(dir / "lm.arpa", random_arpa(lm, rng));

  write(dir / "analyze.conf",
        "# Lattice rescoring with an independently drawn bigram LM.\n"
        "src_test = src.txt\n"
        "predictors = fst,lm\n"
        "predictor_weights = 1.0,1.0\n"
        "fst_path = lat/%d.fst.txt\n"
        "lm_path = lm.arpa\n"
        "strategies = greedy,beam4,beam20,dfs,exhaustive\n"
        "output_dir = analysis\n");
}

}  // namespace ensdec
