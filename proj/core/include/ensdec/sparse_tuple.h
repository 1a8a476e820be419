// sparse_tuple.h
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

#ifndef ENSDEC_SPARSE_TUPLE_H_
#define ENSDEC_SPARSE_TUPLE_H_

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ensdec/combine.h"
#include "ensdec/types.h"

namespace ensdec {

// Per-predictor cost vector stored sparsely (index -> cost). Absent
// components are zero.
struct SparseTupleWeight {
  std::map<std::size_t, Cost> components;

  // dot(weights, densified components).
  Cost scalar(const PredictorWeights &weights) const;

  friend bool operator==(const SparseTupleWeight &,
                         const SparseTupleWeight &) = default;
};

// Canonical "k1:v1,k2:v2" with ascending indices and six decimals; the
// empty tuple is "-".
std::string serialize_sparse_tuple(const SparseTupleWeight &w);

// Exact inverse of serialize_sparse_tuple. Throws std::invalid_argument on
// duplicate indices, malformed pairs or non-finite values.
SparseTupleWeight parse_sparse_tuple(std::string_view text);

// Lattice whose arcs carry SparseTupleWeights. Same text layout as the
// AT&T acceptor format with the weight field replaced by the tuple string.
struct TupleArc {
  Token label;
  StateId next_state;
  SparseTupleWeight weight;
};

struct TupleLattice {
  StateId start = 0;
  std::vector<std::vector<TupleArc>> arcs;
  std::map<StateId, SparseTupleWeight> finals;
};

void write_tuple_lattice(const TupleLattice &lattice, std::ostream &out);
TupleLattice load_tuple_lattice(std::istream &in,
                                const std::string &source = "lattice");

}  // namespace ensdec

#endif  // ENSDEC_SPARSE_TUPLE_H_
