// ngram_posterior.cc
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

#include "ensdec/ngram_posterior.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "ensdec/errors.h"
#include "text_util.h"

namespace ensdec {

NgramPosteriorTable load_ngram_posteriors(std::istream &in,
                                          const std::string &source) {
  NgramPosteriorTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = internal::split_ws(line);
    if (fields.empty()) continue;
    if (fields.size() < 3 || fields[fields.size() - 2] != ":")
      throw ParseError(source, lineno, "expected 'tok1 ... tokn : prob'");
    Ngram g;
    for (std::size_t i = 0; i + 2 < fields.size(); ++i) {
      std::uint32_t id = 0;
      if (!internal::parse_number(fields[i], id))
        throw ParseError(source, lineno,
                         "invalid token id '" + std::string(fields[i]) + "'");
      g.push_back(make_token(id));
    }
    double prob = 0;
    if (!internal::parse_number(fields.back(), prob) || !(prob >= 0.0) ||
        prob > 1.0)
      throw ParseError(source, lineno, "posterior must lie in [0,1]");
    if (g.size() > static_cast<std::size_t>(ArpaModel::kMaxOrder))
      throw ParseError(source, lineno, "n-gram order above 5");
    if (!table.post.emplace(g, prob).second)
      throw ParseError(source, lineno, "duplicate n-gram");
    table.max_order = std::max(table.max_order, static_cast<int>(g.size()));
  }
  return table;
}

NgramPosteriorTable load_ngram_posteriors_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open n-gram posterior file " + path);
  return load_ngram_posteriors(in, path);
}

void write_ngram_posteriors(const NgramPosteriorTable &table,
                            std::ostream &out) {
  std::vector<const std::pair<const Ngram, double> *> rows;
  rows.reserve(table.post.size());
  for (const auto &row : table.post) rows.push_back(&row);
  std::stable_sort(rows.begin(), rows.end(), [](auto *a, auto *b) {
    return a->first.size() < b->first.size();
  });
  for (const auto *row : rows) {
    for (Token t : row->first) out << to_int(t) << ' ';
    out << ": " << format_cost(row->second) << '\n';
  }
}

NgramPosteriorPredictor::NgramPosteriorPredictor(
    std::shared_ptr<const NgramPosteriorTable> table, std::vector<double> theta)
    : table_(std::move(table)), theta_(std::move(theta)) {
  if (theta_.empty()) theta_.assign(std::max(table_->max_order, 1), 1.0);
  if (theta_.size() < static_cast<std::size_t>(table_->max_order))
    throw ConfigError("n-gram posterior predictor needs one theta per order (" +
                      std::to_string(table_->max_order) + ")");
  for (double t : theta_)
    if (!std::isfinite(t)) throw ConfigError("theta values must be finite");
  for (const auto &[g, p] : table_->post)
    if (!g.empty())
      continuations_[Ngram(g.begin(), g.end() - 1)].insert(g.back());
}

Posterior NgramPosteriorPredictor::do_predict_next() const {
  // history() starts with BOS, which never occurs in the table.
  const auto &hist = history();
  const std::span<const Token> target(hist.begin() + 1, hist.end());
  const std::size_t max_order = static_cast<std::size_t>(table_->max_order);

  std::set<Token> offered;
  Ngram ctx;
  for (std::size_t n = 1; n <= max_order && n - 1 <= target.size(); ++n) {
    auto suffix = target.last(n - 1);
    ctx.assign(suffix.begin(), suffix.end());
    if (auto it = continuations_.find(ctx); it != continuations_.end())
      offered.insert(it->second.begin(), it->second.end());
  }

  Posterior p;
  p.default_cost = 0.0;
  Ngram g;
  for (Token y : offered) {
    double score = 0.0;
    for (std::size_t n = 1; n <= max_order && n - 1 <= target.size(); ++n) {
      auto suffix = target.last(n - 1);
      g.assign(suffix.begin(), suffix.end());
      g.push_back(y);
      score += theta_[n - 1] * table_->lookup(g);
    }
    p.entries.emplace_hint(p.entries.end(), y, -score);
  }
  return p;
}

}  // namespace ensdec
