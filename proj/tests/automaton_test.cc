// automaton_test.cc
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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "ensdec/automaton.h"
#include "ensdec/errors.h"
#include "ensdec/random.h"
#include "ensdec/sparse_tuple.h"
#include "testing/instances.h"
#include "testing/oracles.h"

namespace ensdec {
namespace {

using testing::enumerate_paths;
using testing::parse_att;
using testing::tok;

TEST(AttTest, LoadsArcAndFinal) {
  const auto a = parse_att("0 1 5 0.5\n1 0.2\n");
  ASSERT_EQ(a.num_states(), 2u);
  EXPECT_EQ(a.start(), 0u);
  ASSERT_EQ(a.arcs(0).size(), 1u);
  EXPECT_EQ(a.arcs(0)[0].label, tok(5));
  EXPECT_EQ(a.arcs(0)[0].next_state, 1u);
  EXPECT_EQ(a.arcs(0)[0].weight, 0.5);
  EXPECT_EQ(a.final_weight(1), 0.2);
  EXPECT_TRUE(std::isinf(a.final_weight(0)));
}

TEST(AttTest, FinalWithoutWeightIsZero) {
  EXPECT_EQ(parse_att("0 1 3 1\n1\n").final_weight(1), 0.0);
}

TEST(AttTest, EmptyInputIsParseError) {
  EXPECT_THROW(parse_att(""), ParseError);
}

TEST(AttTest, MalformedLineReportsLineNumber) {
  try {
    parse_att("0 1 3 0.5\n1 2 x 0.1\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(AttTest, EosLabelIsRejectedUnlessAllowed) {
  EXPECT_THROW(parse_att("0 1 2 0.5\n1\n"), ParseError);
  std::istringstream in("0 1 2 0.5\n1\n");
  const auto a = load_att(in, "lattice", AttOptions{.allow_eos_labels = true});
  EXPECT_EQ(a.arcs(0)[0].label, kEos);
}

TEST(AttTest, WriteProducesCanonicalLines) {
  const auto a = parse_att("0 1 5 0.5\n1 0.2\n");
  EXPECT_EQ(write_att(a), "0 1 5 0.500000\n1 0.200000\n");
  EXPECT_EQ(write_att(a), write_att(a));
}

TEST(AttTest, IsolatedStartStateSurvivesRoundTrip) {
  WeightedAutomaton a;
  a.add_states(3);
  a.add_arc(1, Arc{tok(3), 2, 1.0});
  a.set_final(2, 0.0);
  const auto b = parse_att(write_att(a));
  EXPECT_TRUE(enumerate_paths(b, 4).empty());
  EXPECT_TRUE(std::isinf(shortest_cost(b)));
}

TEST(AttTest, NoFinalStateWritesNoFinalLines) {
  WeightedAutomaton a;
  a.add_states(2);
  a.add_arc(0, Arc{tok(3), 1, 1.0});
  EXPECT_EQ(write_att(a), "0 1 3 1.000000\n");
}

TEST(AttTest, RoundTripPreservesEnumeratedPaths) {
  Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_acyclic_automaton(rng);
    const auto b = parse_att(write_att(a));
    const auto pa = enumerate_paths(a, 8), pb = enumerate_paths(b, 8);
    ASSERT_EQ(pa.size(), pb.size()) << write_att(a);
    for (std::size_t i = 0; i < pa.size(); ++i) {
      EXPECT_EQ(pa[i].labels, pb[i].labels);
      // Costs pass through 6-decimal text; each term rounds by <= 5e-7.
      EXPECT_NEAR(pa[i].cost, pb[i].cost, 5e-6);
    }
    // A second round trip is exact.
    const auto c = parse_att(write_att(b));
    const auto pc = enumerate_paths(c, 8);
    ASSERT_EQ(pb.size(), pc.size());
    for (std::size_t i = 0; i < pb.size(); ++i) EXPECT_EQ(pb[i].cost, pc[i].cost);
    EXPECT_EQ(shortest_cost(b), shortest_cost(c));
  }
}

TEST(AttTest, RoundTripIsExactForMicroGridWeights) {
  Rng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_acyclic_automaton(rng, 8, true);
    const auto pa = enumerate_paths(a, 8), pb = enumerate_paths(parse_att(write_att(a)), 8);
    ASSERT_EQ(pa.size(), pb.size());
    for (std::size_t i = 0; i < pa.size(); ++i) {
      EXPECT_EQ(pa[i].labels, pb[i].labels);
      EXPECT_EQ(pa[i].cost, pb[i].cost);
    }
  }
}

TEST(DeterminismTest, DuplicateLabelIsReported) {
  const auto a = parse_att("0 1 7 0.1\n0 2 7 0.2\n1\n2\n");
  const auto v = validate_deterministic(a);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->state, 0u);
  EXPECT_EQ(v->label, tok(7));
}

TEST(DeterminismTest, ChainAndDiamondAreDeterministic) {
  EXPECT_FALSE(validate_deterministic(parse_att("0 1 3 1\n1 2 4 1\n2\n")));
  EXPECT_FALSE(validate_deterministic(
      parse_att("0 1 3 1\n0 2 4 1\n1 3 5 1\n2 3 5 2\n3\n")));
}

TEST(DeterminismTest, RandomDuplicateInjectionIsAlwaysDetected) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = testing::random_automaton(rng);
    ASSERT_FALSE(validate_deterministic(a));
    std::vector<std::pair<StateId, Arc>> arcs;
    for (StateId s = 0; s < a.num_states(); ++s)
      for (const Arc &arc : a.arcs(s)) arcs.emplace_back(s, arc);
    if (arcs.empty()) continue;
    const auto &[s, arc] = arcs[rng.range(0, arcs.size() - 1)];
    a.add_arc(s, Arc{arc.label, static_cast<StateId>(rng.range(0, a.num_states() - 1)),
                     rng.uniform(0.0, 1.0)});
    const auto v = validate_deterministic(a);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->state, s);
    EXPECT_EQ(v->label, arc.label);
  }
}

TEST(ShortestCostTest, SingleArc) {
  EXPECT_NEAR(shortest_cost(parse_att("0 1 3 0.5\n1 0.2\n")), 0.7, 1e-12);
}

TEST(ShortestCostTest, ParallelPathsTakeMinimum) {
  EXPECT_NEAR(shortest_cost(parse_att("0 1 3 1.0\n0 1 4 0.6\n1\n")), 0.6, 1e-12);
}

TEST(ShortestCostTest, NoFinalIsInfinite) {
  EXPECT_TRUE(std::isinf(shortest_cost(parse_att("0 1 3 1.0\n"))));
}

TEST(ShortestCostTest, MatchesPathEnumerationOnAcyclicAutomata) {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_acyclic_automaton(rng);
    const Cost expect = testing::min_path_cost(enumerate_paths(a, 8));
    if (std::isinf(expect))
      EXPECT_TRUE(std::isinf(shortest_cost(a)));
    else
      EXPECT_NEAR(shortest_cost(a), expect, 1e-9);
  }
}

TEST(ShortestCostTest, NeverExceedsRandomWalkCosts) {
  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_automaton(rng);
    const Cost best = shortest_cost(a);
    for (int walk = 0; walk < 1000; ++walk) {
      StateId s = a.start();
      Cost acc = 0.0;
      for (int step = 0; step < 12; ++step) {
        if (a.is_final(s) && (a.arcs(s).empty() || rng.bernoulli(0.3))) {
          EXPECT_LE(best, acc + a.final_weight(s) + 1e-12);
          break;
        }
        if (a.arcs(s).empty()) break;
        const Arc &arc = a.arcs(s)[rng.range(0, a.arcs(s).size() - 1)];
        acc += arc.weight;
        s = arc.next_state;
      }
    }
  }
}

TEST(SparseTupleTest, SerializeFormat) {
  EXPECT_EQ(serialize_sparse_tuple({{{0, 0.5}, {2, 1.25}}}), "0:0.500000,2:1.250000");
  EXPECT_EQ(serialize_sparse_tuple({}), "-");
  EXPECT_EQ(parse_sparse_tuple("-"), SparseTupleWeight{});
}

TEST(SparseTupleTest, RejectsMalformedText) {
  EXPECT_THROW(parse_sparse_tuple("0:abc"), std::invalid_argument);
  EXPECT_THROW(parse_sparse_tuple(""), std::invalid_argument);
  EXPECT_THROW(parse_sparse_tuple("1:0.5,1:0.25"), std::invalid_argument);
}

TEST(SparseTupleTest, RoundTripOnMicroGrid) {
  Rng rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    SparseTupleWeight w;
    const std::size_t n = rng.range(0, 6);
    for (std::size_t i = 0; i < n; ++i) {
      // Values on the 1e-6 grid survive 6-decimal formatting exactly.
      const double mag = static_cast<double>(rng.range(0, 20'000'000)) / 1e6;
      const double v = rng.bernoulli(0.3) ? -mag : mag;
      w.components[rng.range(0, 9)] = v;
    }
    EXPECT_EQ(parse_sparse_tuple(serialize_sparse_tuple(w)), w) << serialize_sparse_tuple(w);
  }
}

TEST(SparseTupleTest, ScalarIsDotProduct) {
  SparseTupleWeight w{{{0, 1.0}, {2, 2.0}}};
  EXPECT_DOUBLE_EQ(w.scalar(PredictorWeights{0.5, 7.0, 3.0}), 6.5);
}

TEST(TupleLatticeTest, WriteLoadRoundTrip) {
  TupleLattice l;
  l.arcs.resize(3);
  l.arcs[0].push_back({tok(3), 1, {{{0, 0.5}, {1, 1.0}}}});
  l.arcs[1].push_back({kEos, 2, {{{1, 0.25}}}});
  l.finals[2] = {};
  std::ostringstream out;
  write_tuple_lattice(l, out);
  std::istringstream in(out.str());
  const TupleLattice back = load_tuple_lattice(in);
  std::ostringstream again;
  write_tuple_lattice(back, again);
  EXPECT_EQ(out.str(), again.str());
  ASSERT_EQ(back.arcs.size(), 3u);
  EXPECT_EQ(back.arcs[0][0].weight, l.arcs[0][0].weight);
}

}  // namespace
}  // namespace ensdec
