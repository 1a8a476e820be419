// config.cc
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

#include "ensdec/config.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "ensdec/errors.h"
#include "text_util.h"

namespace ensdec {

namespace {

struct KeyInfo {
  const char *key;
  const char *default_value;
  const char *help;
};

constexpr KeyInfo kKeys[] = {
    {"config", "", "Optional 'key = value' file; flags override its values"},
    {"src_test", "", "Source sentences, one per line (required)"},
    {"src_wmap", "", "Source word map; without it sources are integer ids"},
    {"trg_wmap", "", "Target word map for ARPA words and text/nbest output"},
    {"predictors", "", "Comma-separated constellation, e.g. fst,lm (required)"},
    {"predictor_weights", "1.0 each", "Comma-separated weights, one per predictor"},
    {"decoder", "beam", "greedy | beam | dfs | exhaustive"},
    {"beam", "4", "Beam size"},
    {"max_len_factor", "3", "max_len = factor * source length + offset"},
    {"max_len_offset", "10", "See max_len_factor"},
    {"outputs", "text", "Comma-separated subset of text,nbest,sfst,fst,ngram"},
    {"nbest_size", "0", "Lines per sentence in out.nbest (0 = all)"},
    {"ngram_order", "4", "Maximum order of out.ngram posteriors (1..5)"},
    {"ngram_occurrence", "false", "Count every n-gram occurrence instead of presence"},
    {"output_dir", "out", "Directory receiving the out.* files"},
    {"range", "all", "1-based inclusive sentence interval 'from:to'"},
    {"jobs", "1", "Sentences decoded in parallel"},
    {"expansion_budget", "5000000", "Node budget of exhaustive enumeration"},
    {"strategies", "greedy,beam4,beam20,dfs,exhaustive",
     "analyze: strategies to compare (beamN selects beam size N)"},
    {"report", "<output_dir>/analyze.tsv", "analyze: TSV report path"},
};

// Per-kind resource keys. A numeric suffix selects the n-th predictor of
// that kind; without suffix the value applies to all of them.
struct KindKey {
  const char *kind;
  const char *param;
  const char *default_value;
  const char *help;
};

constexpr KindKey kKindKeys[] = {
    {"fst", "path", "", "Acceptor in AT&T text format (%d = sentence id)"},
    {"lm", "path", "", "ARPA language model"},
    {"lm", "floor", "20", "Cost of words without unigram or <unk>"},
    {"lex", "path", "", "Lexical table 'src_id trg_id prob'"},
    {"lex", "floor", "20", "Cost of targets without table mass"},
    {"lex", "p_eos", "0.1", "EOS probability"},
    {"wc", "penalty", "1.0", "Cost per non-EOS token"},
    {"ngram", "path", "", "N-gram posterior file (%d = sentence id)"},
    {"ngram", "theta", "1 per order", "Comma-separated per-order weights"},
};

const std::set<std::string> kKinds{"fst", "lm", "lex", "wc", "ngram"};
const std::set<std::string> kOutputs{"text", "nbest", "sfst", "fst", "ngram"};

bool is_plain_key(const std::string &key) {
  return std::any_of(std::begin(kKeys), std::end(kKeys),
                     [&](const KeyInfo &k) { return key == k.key; });
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> items;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    items.emplace_back(internal::trim(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return items;
}

std::string resolve_path(const RawValue &v) {
  std::filesystem::path p(v.value);
  if (p.is_relative() && !v.base_dir.empty()) p = v.base_dir / p;
  return p.string();
}

// Collects every offending key before failing.
class Validator {
 public:
  void fail(const std::string &key, const std::string &why) {
    problems_.push_back("'" + key + "': " + why);
  }

  template <typename T>
  void number(const RawConfig &raw, const std::string &key, T &out) {
    auto it = raw.find(key);
    if (it == raw.end()) return;
    T v{};
    if (!internal::parse_number(internal::trim(it->second.value), v))
      return fail(key, "invalid value '" + it->second.value + "'");
    out = v;
  }

  void flag(const RawConfig &raw, const std::string &key, bool &out) {
    auto it = raw.find(key);
    if (it == raw.end()) return;
    const auto v = internal::trim(it->second.value);
    if (v == "true" || v == "1") out = true;
    else if (v == "false" || v == "0") out = false;
    else fail(key, "expected true or false, got '" + it->second.value + "'");
  }

  std::vector<double> reals(const std::string &key, std::string_view text) {
    std::vector<double> out;
    for (const auto &item : split_list(text)) {
      double v = 0;
      if (!internal::parse_number(item, v) || !std::isfinite(v)) {
        fail(key, "invalid number '" + item + "'");
        return {};
      }
      out.push_back(v);
    }
    return out;
  }

  void finish() const {
    if (problems_.empty()) return;
    std::string msg = "invalid configuration:";
    for (const auto &p : problems_) msg += "\n  " + p;
    throw ConfigError(msg);
  }

 private:
  std::vector<std::string> problems_;
};

}  // namespace

SearchConfig RunConfig::search_config(std::size_t src_len) const {
  SearchConfig sc;
  sc.strategy = decoder;
  sc.beam = beam;
  sc.max_len = max_len_for(src_len, max_len_factor, max_len_offset);
  sc.expansion_budget = expansion_budget;
  return sc;
}

RawConfig parse_config_file(std::istream &in,
                            const std::filesystem::path &base_dir) {
  RawConfig raw;
  std::vector<std::string> problems;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body(line);
    if (auto hash = body.find('#'); hash != std::string_view::npos)
      body = body.substr(0, hash);
    body = internal::trim(body);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos || internal::trim(body.substr(0, eq)).empty()) {
      problems.push_back("line " + std::to_string(lineno) +
                         ": expected 'key = value'");
      continue;
    }
    raw[std::string(internal::trim(body.substr(0, eq)))] =
        RawValue{std::string(internal::trim(body.substr(eq + 1))), base_dir};
  }
  if (!problems.empty()) {
    std::string msg = "malformed config file:";
    for (const auto &p : problems) msg += "\n  " + p;
    throw ConfigError(msg);
  }
  return raw;
}

RawConfig parse_flags(const std::vector<std::string> &args) {
  RawConfig raw;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string &arg = args[i];
    if (!arg.starts_with("--") || arg.size() == 2)
      throw ConfigError("unexpected argument '" + arg + "'");
    std::string key = arg.substr(2);
    std::string value;
    if (auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key.resize(eq);
    } else {
      if (i + 1 >= args.size())
        throw ConfigError("flag --" + key + " needs a value");
      value = args[++i];
    }
    raw[key] = RawValue{value, {}};
  }
  return raw;
}

RawConfig merge_config(const RawConfig &file_values,
                       const RawConfig &flag_values) {
  RawConfig merged = file_values;
  for (const auto &[k, v] : flag_values) merged[k] = v;
  return merged;
}

RunConfig build_config(const RawConfig &raw) {
  RunConfig cfg;
  Validator check;
  auto get = [&](const std::string &key) -> const RawValue * {
    auto it = raw.find(key);
    return it == raw.end() ? nullptr : &it->second;
  };

  // Constellation first: indexed keys are validated against it.
  std::map<std::string, std::size_t> per_kind;
  if (const auto *v = get("predictors")) {
    for (const auto &kind : split_list(v->value)) {
      if (!kKinds.count(kind)) {
        check.fail("predictors", "unknown predictor kind '" + kind + "'");
        continue;
      }
      PredictorSpec spec;
      spec.kind = kind;
      cfg.predictors.push_back(spec);
      ++per_kind[kind];
    }
  } else {
    check.fail("predictors", "required");
  }
  {
    std::map<std::string, std::size_t> seen;
    for (auto &spec : cfg.predictors) {
      const std::size_t index = ++seen[spec.kind];
      spec.name = per_kind[spec.kind] > 1 ? spec.kind + std::to_string(index)
                                          : spec.kind;
    }
  }

  const std::regex kind_key("(fst|lm|lex|wc|ngram)_(path|floor|p_eos|penalty|theta)([0-9]*)");
  // Unsuffixed values first so that indexed ones override them.
  std::vector<std::pair<std::string, const RawValue *>> indexed;
  for (const auto &[key, value] : raw) {
    if (is_plain_key(key)) continue;
    std::smatch m;
    const bool known =
        std::regex_match(key, m, kind_key) &&
        std::any_of(std::begin(kKindKeys), std::end(kKindKeys),
                    [&](const KindKey &k) {
                      return m[1] == k.kind && m[2] == k.param;
                    });
    if (!known) {
      check.fail(key, "unknown key");
      continue;
    }
    if (m[3].length() == 0) indexed.insert(indexed.begin(), {key, &value});
    else indexed.emplace_back(key, &value);
  }
  for (const auto &[key, value] : indexed) {
    std::smatch m;
    std::regex_match(key, m, kind_key);
    const std::string kind = m[1], param = m[2];
    std::size_t index = 0;
    if (m[3].length() > 0) {
      index = std::stoul(m[3]);
      if (index == 0 || index > per_kind[kind]) {
        check.fail(key, "no " + kind + " predictor #" + std::to_string(index) +
                            " in the constellation");
        continue;
      }
    } else if (per_kind[kind] == 0) {
      check.fail(key, "no " + kind + " predictor in the constellation");
      continue;
    }
    std::size_t seen = 0;
    for (auto &spec : cfg.predictors) {
      if (spec.kind != kind) continue;
      ++seen;
      if (index != 0 && seen != index) continue;
      const std::string text(internal::trim(value->value));
      if (param == "path") {
        spec.path = resolve_path(*value);
      } else if (param == "theta") {
        spec.theta = check.reals(key, text);
      } else {
        double v = 0;
        if (!internal::parse_number(text, v) || !std::isfinite(v)) {
          check.fail(key, "invalid number '" + text + "'");
          break;
        }
        if (param == "floor") spec.floor_cost = v;
        else if (param == "p_eos") spec.eos_prob = v;
        else spec.penalty = v;
      }
    }
  }
  {
    std::map<std::string, std::size_t> seen;
    for (const auto &spec : cfg.predictors) {
      const std::size_t index = ++seen[spec.kind];
      if (spec.kind != "wc" && spec.path.empty())
        check.fail(spec.kind + "_path" + (per_kind[spec.kind] > 1
                                              ? std::to_string(index)
                                              : std::string()),
                   "required by predictor '" + spec.name + "'");
    }
  }

  if (const auto *v = get("predictor_weights")) {
    cfg.predictor_weights = check.reals("predictor_weights", v->value);
    if (cfg.predictor_weights.size() != cfg.predictors.size())
      check.fail("predictor_weights",
                 std::to_string(cfg.predictor_weights.size()) +
                     " weights for " + std::to_string(cfg.predictors.size()) +
                     " predictors");
  } else {
    cfg.predictor_weights.assign(cfg.predictors.size(), 1.0);
  }

  if (const auto *v = get("decoder")) {
    if (auto s = parse_strategy(internal::trim(v->value)))
      cfg.decoder = *s;
    else
      check.fail("decoder", "expected greedy, beam, dfs or exhaustive, got '" +
                                v->value + "'");
  }
  check.number(raw, "beam", cfg.beam);
  if (cfg.beam < 1) check.fail("beam", "must be at least 1");
  check.number(raw, "max_len_factor", cfg.max_len_factor);
  if (!(cfg.max_len_factor >= 0) || !std::isfinite(cfg.max_len_factor))
    check.fail("max_len_factor", "must be finite and non-negative");
  check.number(raw, "max_len_offset", cfg.max_len_offset);
  check.number(raw, "nbest_size", cfg.nbest_size);
  check.number(raw, "ngram_order", cfg.ngram_order);
  if (cfg.ngram_order < 1 || cfg.ngram_order > 5)
    check.fail("ngram_order", "must lie in 1..5");
  check.flag(raw, "ngram_occurrence", cfg.ngram_occurrence);
  check.number(raw, "jobs", cfg.jobs);
  if (cfg.jobs < 1) check.fail("jobs", "must be at least 1");
  check.number(raw, "expansion_budget", cfg.expansion_budget);

  if (const auto *v = get("outputs")) {
    cfg.outputs.clear();
    for (const auto &o : split_list(v->value)) {
      if (!kOutputs.count(o)) check.fail("outputs", "unknown format '" + o + "'");
      else if (std::find(cfg.outputs.begin(), cfg.outputs.end(), o) ==
               cfg.outputs.end())
        cfg.outputs.push_back(o);
    }
  }
  if (const auto *v = get("src_test")) cfg.src_test = resolve_path(*v);
  else check.fail("src_test", "required");
  if (const auto *v = get("src_wmap")) cfg.src_wmap = resolve_path(*v);
  if (const auto *v = get("trg_wmap")) cfg.trg_wmap = resolve_path(*v);
  if (const auto *v = get("output_dir")) cfg.output_dir = resolve_path(*v);
  if (const auto *v = get("report")) cfg.report = resolve_path(*v);

  if (const auto *v = get("range")) {
    const std::string text(internal::trim(v->value));
    const auto colon = text.find(':');
    std::size_t from = 0, to = 0;
    if (colon == std::string::npos ||
        !internal::parse_number(std::string_view(text).substr(0, colon), from) ||
        !internal::parse_number(std::string_view(text).substr(colon + 1), to) ||
        from < 1 || to < from)
      check.fail("range", "expected 'from:to' with 1 <= from <= to");
    else
      cfg.range = std::make_pair(from, to);
  }

  if (const auto *v = get("strategies")) {
    cfg.strategies.clear();
    const std::regex beam_n("beam([0-9]+)");
    for (const auto &s : split_list(v->value)) {
      std::smatch m;
      if (parse_strategy(s) ||
          (std::regex_match(s, m, beam_n) && std::stoul(m[1]) >= 1))
        cfg.strategies.push_back(s);
      else
        check.fail("strategies", "unknown strategy '" + s + "'");
    }
  }

  check.finish();
  return cfg;
}

RunConfig load_config(const std::vector<std::string> &args) {
  RawConfig flags = parse_flags(args);
  RawConfig file;
  if (auto it = flags.find("config"); it != flags.end()) {
    const std::filesystem::path path(it->second.value);
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    file = parse_config_file(in, path.parent_path());
    file.erase("config");
  }
  return build_config(merge_config(file, flags));
}

std::string config_help() {
  std::ostringstream out;
  out << "Flags (also accepted as 'key = value' lines in --config):\n";
  for (const auto &k : kKeys) {
    out << "  --" << k.key;
    if (*k.default_value) out << " (default: " << k.default_value << ")";
    out << "\n      " << k.help << '\n';
  }
  out << "Per-predictor flags; append N to address the N-th predictor of a\n"
         "kind (e.g. --lm_path2), omit it to address all of them:\n";
  for (const auto &k : kKindKeys) {
    out << "  --" << k.kind << '_' << k.param;
    if (*k.default_value) out << " (default: " << k.default_value << ")";
    out << "\n      " << k.help << '\n';
  }
  return out.str();
}

}  // namespace ensdec
