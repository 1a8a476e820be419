// lex_predictor.cc
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

#include "ensdec/lex_predictor.h"

#include <cmath>
#include <fstream>

#include "ensdec/errors.h"
#include "text_util.h"

namespace ensdec {

namespace {
constexpr double kMassTolerance = 1e-6;
}

void LexTable::add(Token src, Token trg, double prob) {
  if (!(prob > 0.0 && prob <= 1.0))
    throw std::invalid_argument("probability must lie in (0,1]");
  auto &row = table_[src];
  if (!row.emplace(trg, prob).second)
    throw std::invalid_argument("duplicate (source, target) pair");
  double mass = 0.0;
  for (const auto &[t, p] : row) mass += p;
  if (mass > 1.0 + kMassTolerance)
    throw std::invalid_argument("translation mass of source " +
                                std::to_string(to_int(src)) + " exceeds 1");
}

LexTable LexTable::load(std::istream &in, const std::string &source) {
  LexTable tbl;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = internal::split_ws(line);
    if (fields.empty()) continue;
    std::uint32_t src = 0, trg = 0;
    double prob = 0;
    if (fields.size() != 3 || !internal::parse_number(fields[0], src) ||
        !internal::parse_number(fields[1], trg) ||
        !internal::parse_number(fields[2], prob))
      throw ParseError(source, lineno, "expected 'src_id trg_id prob'");
    try {
      tbl.add(make_token(src), make_token(trg), prob);
    } catch (const std::invalid_argument &e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  return tbl;
}

LexTable LexTable::load_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open lexical table " + path);
  return load(in, path);
}

const std::map<Token, double> *LexTable::translations(Token src) const {
  auto it = table_.find(src);
  return it == table_.end() ? nullptr : &it->second;
}

LexPredictor::LexPredictor(std::shared_ptr<const LexTable> table,
                           Cost floor_cost, double eos_prob)
    : table_(std::move(table)), floor_cost_(floor_cost), eos_prob_(eos_prob) {
  if (!(floor_cost_ >= 0.0) || !std::isfinite(floor_cost_))
    throw ConfigError("lex floor cost must be finite and non-negative");
  if (!(eos_prob_ > 0.0 && eos_prob_ <= 1.0))
    throw ConfigError("lex EOS probability must lie in (0,1]");
}

void LexPredictor::do_initialize(std::span<const Token> src_sentence) {
  if (src_sentence.empty())
    throw DataError("lex predictor needs a non-empty source sentence");
  std::map<Token, double> mass;
  for (Token x : src_sentence)
    if (const auto *row = table_->translations(x))
      for (const auto &[y, p] : *row) mass[y] += p;
  const double n = static_cast<double>(src_sentence.size());
  posterior_ = Posterior{};
  posterior_.default_cost = floor_cost_;
  for (const auto &[y, m] : mass)
    posterior_.entries.emplace_hint(posterior_.entries.end(), y,
                                    -std::log(m / n));
  posterior_.entries[kEos] = -std::log(eos_prob_);
}

}  // namespace ensdec
