// sparse_tuple.cc
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

#include "ensdec/sparse_tuple.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "ensdec/errors.h"
#include "text_util.h"

namespace ensdec {

Cost SparseTupleWeight::scalar(const PredictorWeights &weights) const {
  Cost total = 0.0;
  for (const auto &[k, c] : components) {
    if (k >= weights.size())
      throw std::out_of_range("tuple component " + std::to_string(k) +
                              " has no predictor weight");
    total += weighted_cost(weights[k], c);
  }
  return total;
}

std::string serialize_sparse_tuple(const SparseTupleWeight &w) {
  if (w.components.empty()) return "-";
  std::string out;
  for (const auto &[k, c] : w.components) {
    if (!out.empty()) out += ',';
    out += std::to_string(k);
    out += ':';
    out += format_cost(c);
  }
  return out;
}

SparseTupleWeight parse_sparse_tuple(std::string_view text) {
  SparseTupleWeight w;
  if (text == "-") return w;
  if (text.empty()) throw std::invalid_argument("empty sparse tuple");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view pair = text.substr(pos, comma - pos);
    const std::size_t colon = pair.find(':');
    std::size_t index = 0;
    double value = 0;
    if (colon == std::string_view::npos ||
        !internal::parse_number(pair.substr(0, colon), index) ||
        !internal::parse_number(pair.substr(colon + 1), value) ||
        !std::isfinite(value))
      throw std::invalid_argument("malformed tuple component '" +
                                  std::string(pair) + "'");
    if (!w.components.emplace(index, value).second)
      throw std::invalid_argument("duplicate tuple index " +
                                  std::to_string(index));
    pos = comma + 1;
  }
  return w;
}

void write_tuple_lattice(const TupleLattice &lattice, std::ostream &out) {
  std::vector<StateId> order{lattice.start};
  for (StateId s = 0; s < lattice.arcs.size(); ++s)
    if (s != lattice.start) order.push_back(s);
  for (StateId s : order) {
    if (s >= lattice.arcs.size()) continue;
    for (const auto &arc : lattice.arcs[s])
      out << s << ' ' << arc.next_state << ' ' << to_int(arc.label) << ' '
          << serialize_sparse_tuple(arc.weight) << '\n';
  }
  for (const auto &[s, w] : lattice.finals) {
    out << s;
    if (!w.components.empty()) out << ' ' << serialize_sparse_tuple(w);
    out << '\n';
  }
}

TupleLattice load_tuple_lattice(std::istream &in, const std::string &source) {
  TupleLattice lattice;
  bool have_start = false;
  std::string line;
  std::size_t lineno = 0;
  auto ensure = [&](std::size_t s) {
    if (lattice.arcs.size() <= s) lattice.arcs.resize(s + 1);
  };
  auto tuple = [&](std::string_view field) {
    try {
      return parse_sparse_tuple(field);
    } catch (const std::invalid_argument &e) {
      throw ParseError(source, lineno, e.what());
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto fields = internal::split_ws(line);
    if (fields.empty()) continue;
    StateId src = 0, dst = 0;
    std::uint32_t label = 0;
    if (!internal::parse_number(fields[0], src))
      throw ParseError(source, lineno, "invalid state id");
    ensure(src);
    if (!have_start) {
      lattice.start = src;
      have_start = true;
    }
    if (fields.size() <= 2) {
      lattice.finals[src] =
          fields.size() == 2 ? tuple(fields[1]) : SparseTupleWeight{};
    } else if (fields.size() == 4) {
      if (!internal::parse_number(fields[1], dst) ||
          !internal::parse_number(fields[2], label))
        throw ParseError(source, lineno, "invalid arc line");
      ensure(dst);
      lattice.arcs[src].push_back(TupleArc{make_token(label), dst, tuple(fields[3])});
    } else {
      throw ParseError(source, lineno, "expected 1, 2 or 4 fields");
    }
  }
  if (!have_start) throw ParseError(source, lineno, "no start state");
  return lattice;
}

}  // namespace ensdec
