// arpa.cc
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

#include "ensdec/arpa.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "ensdec/errors.h"
#include "text_util.h"

namespace ensdec {

namespace {

constexpr double kLn10 = std::numbers::ln10;

Cost log10_to_cost(double log10_value) { return -log10_value * kLn10; }

class ArpaReader {
 public:
  ArpaReader(std::istream &in, const std::string &source, const WordMap *wmap)
      : in_(in), source_(source), wmap_(wmap) {}

  // Next non-blank line, trimmed; false at end of stream.
  bool next(std::string_view &line) {
    while (std::getline(in_, buf_)) {
      ++lineno_;
      line = internal::trim(buf_);
      if (!line.empty()) return true;
    }
    return false;
  }

  Token word(std::string_view w) const {
    if (w == "<s>") return kBos;
    if (w == "</s>") return kEos;
    if (w == "<unk>") return kUnk;
    if (wmap_) {
      if (auto t = wmap_->find(w)) return *t;
      fail("word '" + std::string(w) + "' missing from word map");
    }
    std::uint32_t id = 0;
    if (!internal::parse_number(w, id))
      fail("word '" + std::string(w) + "' is not an integer id");
    return make_token(id);
  }

  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(source_, lineno_, what);
  }

 private:
  std::istream &in_;
  const std::string &source_;
  const WordMap *wmap_;
  std::string buf_;
  std::size_t lineno_ = 0;
};

}  // namespace

ArpaModel ArpaModel::load(std::istream &in, const std::string &source,
                          const WordMap *wmap) {
  ArpaReader reader(in, source, wmap);
  ArpaModel m;
  std::string_view line;
  if (!reader.next(line)) reader.fail("empty ARPA file");
  if (line != "\\data\\") reader.fail("expected \\data\\ header");

  // "ngram k=count" lines.
  std::vector<std::size_t> declared;
  bool have_line = reader.next(line);
  while (have_line && line.starts_with("ngram ")) {
    const auto eq = line.find('=');
    int k = 0;
    std::size_t count = 0;
    if (eq == std::string_view::npos ||
        !internal::parse_number(internal::trim(line.substr(6, eq - 6)), k) ||
        !internal::parse_number(internal::trim(line.substr(eq + 1)), count))
      reader.fail("malformed count line '" + std::string(line) + "'");
    if (k < 1 || k > kMaxOrder)
      reader.fail("unsupported n-gram order " + std::to_string(k));
    if (k != static_cast<int>(declared.size()) + 1)
      reader.fail("n-gram counts must be listed in order");
    declared.push_back(count);
    have_line = reader.next(line);
  }
  if (declared.empty()) reader.fail("no n-gram counts in \\data\\ section");
  m.order_ = static_cast<int>(declared.size());
  m.counts_.assign(declared.size(), 0);

  for (int k = 1; k <= m.order_; ++k) {
    const std::string header = "\\" + std::to_string(k) + "-grams:";
    if (!have_line) reader.fail("missing section " + header);
    if (line != header)
      reader.fail("expected " + header + ", got '" + std::string(line) + "'");
    while ((have_line = reader.next(line)) && !line.starts_with("\\")) {
      auto fields = internal::split_ws(line);
      const std::size_t n = static_cast<std::size_t>(k);
      if (fields.size() != n + 1 && fields.size() != n + 2)
        reader.fail("expected " + std::to_string(n + 1) + " or " +
                    std::to_string(n + 2) + " fields in " + header);
      double logp = 0;
      if (!internal::parse_number(fields[0], logp))
        reader.fail("invalid log probability '" + std::string(fields[0]) + "'");
      Ngram g;
      for (std::size_t i = 1; i <= n; ++i) g.push_back(reader.word(fields[i]));
      if (k > 1 && !m.prob_.count(Ngram(g.begin(), g.end() - 1)))
        reader.fail("prefix of " + std::to_string(k) + "-gram is not listed");
      if (!m.prob_.emplace(g, logp).second) reader.fail("duplicate n-gram");
      if (fields.size() == n + 2) {
        double bo = 0;
        if (!internal::parse_number(fields[n + 1], bo))
          reader.fail("invalid backoff '" + std::string(fields[n + 1]) + "'");
        m.backoff_.emplace(g, bo);
      }
      ++m.counts_[k - 1];
    }
    if (m.counts_[k - 1] != declared[k - 1])
      reader.fail(header + " declares " + std::to_string(declared[k - 1]) +
                  " entries but lists " + std::to_string(m.counts_[k - 1]));
  }
  if (!have_line || line != "\\end\\") reader.fail("missing \\end\\ marker");

  for (const auto &[g, logp] : m.prob_)
    if (g.size() == 1 && g[0] != kBos) m.vocabulary_.push_back(g[0]);
  return m;
}

ArpaModel ArpaModel::load_file(const std::string &path, const WordMap *wmap) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open ARPA file " + path);
  return load(in, path, wmap);
}

std::optional<double> ArpaModel::log10_prob(const Ngram &ngram) const {
  auto it = prob_.find(ngram);
  if (it == prob_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> ArpaModel::log10_backoff(const Ngram &ngram) const {
  auto it = backoff_.find(ngram);
  if (it == backoff_.end()) return std::nullopt;
  return it->second;
}

std::size_t ArpaModel::num_ngrams(int n) const {
  if (n < 1 || n > order_) return 0;
  return counts_[n - 1];
}

Cost ArpaModel::cost(std::span<const Token> history, Token token) const {
  const std::size_t max_ctx = static_cast<std::size_t>(order_ - 1);
  if (history.size() > max_ctx) history = history.last(max_ctx);
  Cost acc = 0.0;
  Ngram g;
  for (std::size_t skip = 0;; ++skip) {
    auto ctx = history.subspan(skip);
    g.assign(ctx.begin(), ctx.end());
    g.push_back(token);
    if (auto it = prob_.find(g); it != prob_.end())
      return acc + log10_to_cost(it->second);
    if (ctx.empty()) {
      if (auto it = prob_.find(Ngram{kUnk}); it != prob_.end())
        return acc + log10_to_cost(it->second);
      return acc + floor_cost_;
    }
    g.pop_back();
    if (auto it = backoff_.find(g); it != backoff_.end())
      acc += log10_to_cost(it->second);
  }
}

LmPredictor::LmPredictor(std::shared_ptr<const ArpaModel> model)
    : model_(std::move(model)) {}

void LmPredictor::do_initialize(std::span<const Token>) {
  context_.assign(1, kBos);
}

Posterior LmPredictor::do_predict_next() const {
  Posterior p;
  for (Token t : model_->vocabulary())
    p.entries.emplace_hint(p.entries.end(), t, model_->cost(context_, t));
  p.default_cost = model_->cost(context_, kUnk);
  return p;
}

void LmPredictor::do_consume(Token token) {
  context_.push_back(token);
  const std::size_t max_ctx = static_cast<std::size_t>(model_->order() - 1);
  if (context_.size() > max_ctx)
    context_.erase(context_.begin(),
                   context_.end() - static_cast<std::ptrdiff_t>(max_ctx));
}

void LmPredictor::do_set_state(const std::any &state) {
  context_ = std::any_cast<std::vector<Token>>(state);
}

}  // namespace ensdec
