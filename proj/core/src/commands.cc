// commands.cc
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

#include "ensdec/commands.h"

#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <regex>
#include <sstream>
#include <thread>

#include "ensdec/arpa.h"
#include "ensdec/errors.h"
#include "ensdec/fst_predictor.h"
#include "ensdec/lex_predictor.h"
#include "ensdec/ngram_posterior.h"
#include "ensdec/output.h"
#include "ensdec/synthetic.h"
#include "ensdec/word_count_predictor.h"
#include "text_util.h"

namespace ensdec {

namespace fs = std::filesystem;

namespace {

bool is_template(const std::string &path) {
  return path.find("%d") != std::string::npos;
}

std::string expand_template(const std::string &path, std::size_t sentence_id) {
  std::string out = path;
  const std::string id = std::to_string(sentence_id);
  for (auto pos = out.find("%d"); pos != std::string::npos;
       pos = out.find("%d", pos + id.size()))
    out.replace(pos, 2, id);
  return out;
}

// Read-only model data shared by all sentence workers.
struct Models {
  std::unique_ptr<WordMap> src_wmap;
  std::unique_ptr<WordMap> trg_wmap;
  std::vector<std::shared_ptr<const WeightedAutomaton>> fsts;
  std::vector<std::shared_ptr<const ArpaModel>> lms;
  std::vector<std::shared_ptr<const LexTable>> lexes;
  std::vector<std::shared_ptr<const NgramPosteriorTable>> ngrams;
};

Models load_models(const RunConfig &cfg) {
  Models m;
  if (!cfg.src_wmap.empty())
    m.src_wmap = std::make_unique<WordMap>(WordMap::load_file(cfg.src_wmap));
  if (!cfg.trg_wmap.empty())
    m.trg_wmap = std::make_unique<WordMap>(WordMap::load_file(cfg.trg_wmap));
  const std::size_t n = cfg.predictors.size();
  m.fsts.resize(n);
  m.lms.resize(n);
  m.lexes.resize(n);
  m.ngrams.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto &spec = cfg.predictors[k];
    if (spec.kind == "fst" && !is_template(spec.path)) {
      m.fsts[k] = std::make_shared<WeightedAutomaton>(load_att_file(spec.path));
    } else if (spec.kind == "lm") {
      auto lm = ArpaModel::load_file(spec.path, m.trg_wmap.get());
      lm.set_floor_cost(spec.floor_cost);
      m.lms[k] = std::make_shared<ArpaModel>(std::move(lm));
    } else if (spec.kind == "lex") {
      m.lexes[k] = std::make_shared<LexTable>(LexTable::load_file(spec.path));
    } else if (spec.kind == "ngram" && !is_template(spec.path)) {
      m.ngrams[k] = std::make_shared<NgramPosteriorTable>(
          load_ngram_posteriors_file(spec.path));
    }
  }
  return m;
}

PredictorSet make_predictors(const RunConfig &cfg, const Models &m,
                             std::size_t sentence_id) {
  PredictorSet set;
  for (std::size_t k = 0; k < cfg.predictors.size(); ++k) {
    const auto &spec = cfg.predictors[k];
    const double w = cfg.predictor_weights[k];
    std::unique_ptr<Predictor> p;
    if (spec.kind == "fst") {
      auto fst = m.fsts[k];
      if (!fst)
        fst = std::make_shared<WeightedAutomaton>(
            load_att_file(expand_template(spec.path, sentence_id)));
      p = std::make_unique<FstPredictor>(std::move(fst));
    } else if (spec.kind == "lm") {
      p = std::make_unique<LmPredictor>(m.lms[k]);
    } else if (spec.kind == "lex") {
      p = std::make_unique<LexPredictor>(m.lexes[k], spec.floor_cost,
                                         spec.eos_prob);
    } else if (spec.kind == "wc") {
      p = std::make_unique<WordCountPredictor>(spec.penalty);
    } else {
      auto table = m.ngrams[k];
      if (!table)
        table = std::make_shared<NgramPosteriorTable>(load_ngram_posteriors_file(
            expand_template(spec.path, sentence_id)));
      p = std::make_unique<NgramPosteriorPredictor>(std::move(table), spec.theta);
    }
    set.add(spec.name, std::move(p), w);
  }
  return set;
}

struct Sentence {
  std::size_t id;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Sentence> read_sentences(const RunConfig &cfg, const Models &m) {
  std::ifstream in(cfg.src_test);
  if (!in) throw DataError("cannot open source file " + cfg.src_test);
  std::vector<Sentence> all;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    Sentence s{lineno, {}};
    for (auto word : internal::split_ws(line)) {
      if (m.src_wmap) {
        s.tokens.push_back(m.src_wmap->find(word).value_or(kUnk));
        continue;
      }
      std::uint32_t id = 0;
      if (!internal::parse_number(word, id))
        throw ParseError(cfg.src_test, lineno,
                         "source word '" + std::string(word) +
                             "' is not an id; configure src_wmap");
      s.tokens.push_back(make_token(id));
    }
    all.push_back(std::move(s));
  }
  if (all.empty()) throw DataError("source file " + cfg.src_test + " is empty");
  if (!cfg.range) return all;
  const auto [from, to] = *cfg.range;
  if (from > all.size())
    throw DataError("range starts after the last sentence (" +
                    std::to_string(all.size()) + ")");
  return std::vector<Sentence>(all.begin() + static_cast<std::ptrdiff_t>(from - 1),
                               all.begin() + static_cast<std::ptrdiff_t>(
                                                 std::min(to, all.size())));
}

// Static admissibility gate for depth-first search, checked before any
// resource is loaded.
void require_dfs_admissible(const RunConfig &cfg) {
  for (std::size_t k = 0; k < cfg.predictors.size(); ++k) {
    const auto &spec = cfg.predictors[k];
    const double w = cfg.predictor_weights[k];
    if (w < 0)
      throw ConfigError("dfs needs admissible pruning, but predictor '" +
                        spec.name + "' has a negative weight");
    if (w != 0 && (spec.kind == "ngram" || (spec.kind == "wc" && spec.penalty < 0)))
      throw ConfigError("dfs needs admissible pruning, but predictor '" +
                        spec.name + "' can produce negative costs");
  }
}

// Runs fn(i) for i in [0, n) on `jobs` threads; results keep index order.
// The exception of the lowest failing index is rethrown.
template <typename T, typename Fn>
std::vector<T> run_ordered(std::size_t n, std::size_t jobs, Fn fn) {
  std::vector<T> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(jobs, n);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

struct SentenceOutput {
  std::string text, nbest, sfst, fst, ngram;
};

bool wants(const RunConfig &cfg, const std::string &format) {
  return std::find(cfg.outputs.begin(), cfg.outputs.end(), format) !=
         cfg.outputs.end();
}

void write_file(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << content;
}

}  // namespace

void decode_corpus(const RunConfig &cfg) {
  if (cfg.decoder == Strategy::kDfs) require_dfs_admissible(cfg);
  const Models models = load_models(cfg);
  const auto sentences = read_sentences(cfg, models);

  auto outputs = run_ordered<SentenceOutput>(
      sentences.size(), cfg.jobs, [&](std::size_t i) {
        const Sentence &s = sentences[i];
        PredictorSet predictors = make_predictors(cfg, models, s.id);
        predictors.initialize(s.tokens);
        const DecodeResult result =
            decode(predictors, cfg.search_config(s.tokens.size()));
        SentenceOutput o;
        const WordMap *wmap = models.trg_wmap.get();
        if (wants(cfg, "text")) o.text = write_text(result, wmap) + "\n";
        if (wants(cfg, "nbest")) {
          std::ostringstream nb;
          write_nbest(result, s.id - 1, predictors.names(), cfg.nbest_size,
                      wmap, nb);
          o.nbest = nb.str();
        }
        if ((wants(cfg, "sfst") || wants(cfg, "fst")) && !result.empty()) {
          const auto lattice = build_hypothesis_lattice(result);
          o.sfst = write_att(lattice.standard);
          std::ostringstream tl;
          write_tuple_lattice(lattice.tuples, tl);
          o.fst = tl.str();
        }
        if (wants(cfg, "ngram") && !result.empty()) {
          std::ostringstream ng;
          write_ngram_posteriors(
              compute_ngram_posteriors(result, cfg.ngram_order,
                                       cfg.ngram_occurrence),
              ng);
          o.ngram = ng.str();
        }
        return o;
      });

  const fs::path dir(cfg.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());
  std::string text, nbest;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    text += outputs[i].text;
    nbest += outputs[i].nbest;
  }
  if (wants(cfg, "text")) write_file(dir / "out.text", text);
  if (wants(cfg, "nbest")) write_file(dir / "out.nbest", nbest);
  const std::pair<const char *, std::string SentenceOutput::*> per_sentence[] = {
      {"sfst", &SentenceOutput::sfst},
      {"fst", &SentenceOutput::fst},
      {"ngram", &SentenceOutput::ngram}};
  for (const auto &[format, member] : per_sentence) {
    if (!wants(cfg, format)) continue;
    const fs::path sub = dir / (std::string("out.") + format);
    fs::create_directories(sub, ec);
    if (ec) throw DataError("cannot create " + sub.string());
    const std::string suffix =
        std::string(format) == "ngram" ? ".ngram" : ".fst.txt";
    for (std::size_t i = 0; i < outputs.size(); ++i)
      write_file(sub / (std::to_string(sentences[i].id) + suffix),
                 outputs[i].*member);
  }
}

std::vector<StrategyRow> analyze_corpus(const RunConfig &cfg) {
  require_dfs_admissible(cfg);
  std::vector<SearchConfig> configs;
  const std::regex beam_n("beam([0-9]+)");
  for (const auto &name : cfg.strategies) {
    SearchConfig sc;
    sc.beam = cfg.beam;
    sc.expansion_budget = cfg.expansion_budget;
    std::smatch m;
    if (auto s = parse_strategy(name)) {
      sc.strategy = *s;
    } else if (std::regex_match(name, m, beam_n)) {
      sc.strategy = Strategy::kBeam;
      sc.beam = std::stoul(m[1]);
    } else {
      throw ConfigError("unknown strategy '" + name + "'");
    }
    configs.push_back(sc);
  }

  const Models models = load_models(cfg);
  const auto sentences = read_sentences(cfg, models);

  struct SentenceStats {
    std::vector<DecodeResult> results;
    DecodeResult exact;
  };
  auto stats = run_ordered<SentenceStats>(
      sentences.size(), cfg.jobs, [&](std::size_t i) {
        const Sentence &s = sentences[i];
        const std::size_t max_len = cfg.search_config(s.tokens.size()).max_len;
        auto run = [&](SearchConfig sc) {
          PredictorSet predictors = make_predictors(cfg, models, s.id);
          predictors.initialize(s.tokens);
          sc.max_len = max_len;
          DecodeResult r = decode(predictors, sc);
          // Only costs and counters are needed downstream.
          r.hypotheses.resize(std::min<std::size_t>(r.hypotheses.size(), 1));
          return r;
        };
        SentenceStats st;
        SearchConfig reference;
        reference.strategy = Strategy::kDfs;
        st.exact = run(reference);
        if (st.exact.empty())
          throw DataError("sentence " + std::to_string(s.id) +
                          " has no finite-cost hypothesis");
        for (const auto &sc : configs) st.results.push_back(run(sc));
        return st;
      });

  std::vector<StrategyRow> rows;
  const double n = static_cast<double>(sentences.size());
  for (std::size_t j = 0; j < configs.size(); ++j) {
    StrategyRow row;
    row.strategy = cfg.strategies[j];
    std::size_t errors = 0;
    for (const auto &st : stats) {
      const DecodeResult &r = st.results[j];
      row.avg_expansions += static_cast<double>(r.stats.expansions);
      if (r.empty() || count_search_errors(r, st.exact)) ++errors;
      row.avg_best_cost += r.stats.best_cost;
    }
    row.avg_expansions /= n;
    row.avg_best_cost /= n;
    row.search_error_rate = static_cast<double>(errors) / n;
    rows.push_back(row);
  }
  return rows;
}

std::string format_analyze_report(const std::vector<StrategyRow> &rows) {
  std::string out = "strategy\tavg_expansions\tsearch_error_rate\tavg_best_cost\n";
  char buf[64];
  for (const auto &r : rows) {
    out += r.strategy;
    std::snprintf(buf, sizeof(buf), "\t%.1f\t%.3f\t", r.avg_expansions,
                  r.search_error_rate);
    out += buf;
    out += format_cost(r.avg_best_cost);
    out += '\n';
  }
  return out;
}

namespace {

template <typename Fn>
int guarded(std::ostream &err, Fn fn) {
  try {
    fn();
    return kExitOk;
  } catch (const ConfigError &e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DataError &e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace

int decode_command(const RunConfig &config, std::ostream &err) {
  return guarded(err, [&] { decode_corpus(config); });
}

int analyze_command(const RunConfig &config, std::ostream &out,
                    std::ostream &err) {
  return guarded(err, [&] {
    const std::string report = format_analyze_report(analyze_corpus(config));
    fs::path path = config.report.empty()
                        ? fs::path(config.output_dir) / "analyze.tsv"
                        : fs::path(config.report);
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    write_file(path, report);
    out << report;
  });
}

namespace {

constexpr const char *kUsage =
    "usage: ensdec <command> [--config FILE] [--key value ...]\n"
    "commands:\n"
    "  decode    decode the source corpus and write the configured outputs\n"
    "  analyze   compare search strategies against the exact reference\n"
    "  synth     write the synthetic lattice-rescoring suite\n"
    "            (--output_dir DIR --sentences N --seed S)\n";

int synth_command(const std::vector<std::string> &args, std::ostream &err) {
  return guarded(err, [&] {
    const RawConfig raw = parse_flags(args);
    SyntheticSuiteSpec spec;
    fs::path dir = "synthetic_suite";
    std::vector<std::string> bad;
    for (const auto &[key, v] : raw) {
      bool ok = true;
      if (key == "output_dir") dir = v.value;
      else if (key == "sentences") ok = internal::parse_number(v.value, spec.sentences);
      else if (key == "seed") ok = internal::parse_number(v.value, spec.seed);
      else ok = false;
      if (!ok) bad.push_back(key);
    }
    if (!bad.empty()) {
      std::string msg = "invalid synth flags:";
      for (const auto &k : bad) msg += " " + k;
      throw ConfigError(msg);
    }
    write_synthetic_suite(dir, spec);
  });
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  if (args.empty()) {
    err << kUsage;
    return kExitConfig;
  }
  const std::string &command = args[0];
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  if (command == "--help" || command == "-h" || command == "help") {
    out << kUsage << '\n' << config_help();
    return kExitOk;
  }
  for (const auto &a : rest) {
    if (a == "--help" || a == "-h") {
      out << kUsage << '\n' << config_help();
      return kExitOk;
    }
  }
  if (command == "synth") return synth_command(rest, err);
  if (command != "decode" && command != "analyze") {
    err << "unknown command '" << command << "'\n" << kUsage;
    return kExitConfig;
  }
  RunConfig config;
  if (int rc = guarded(err, [&] { config = load_config(rest); }); rc != kExitOk)
    return rc;
  return command == "decode" ? decode_command(config, err)
                             : analyze_command(config, out, err);
}

}  // namespace ensdec
