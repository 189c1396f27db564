// Copyright 2026 The linecons Authors
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

#include "linecons/analysis.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "linecons/generate.hpp"
#include "test_support.hpp"

namespace linecons {
namespace {

using testing::c4_with_pendant;
using testing::circle_graph;
using testing::complete_graph;
using testing::make_graph;
using testing::paw;
using testing::star_graph;

using Ids = std::vector<std::string>;

SignedGraph path3() {
  return make_graph({"a", "b", "c", "d"},
                    {{"x", "a", "b", '+'}, {"y", "b", "c", '-'}, {"z", "c", "d", '+'}});
}

void expect_fail(const Verdict& v, Clause c, const std::string& where) {
  EXPECT_FALSE(v.line_consistent);
  ASSERT_TRUE(v.failed_clause);
  EXPECT_EQ(*v.failed_clause, c) << clause_name(*v.failed_clause);
  EXPECT_EQ(v.location.value_or(""), where);
}

TEST(IsthmusTest, Examples) {
  EXPECT_EQ(find_isthmi(path3()), (Ids{"x", "y", "z"}));
  EXPECT_TRUE(find_isthmi(circle_graph("+-+-")).empty());
  EXPECT_EQ(find_isthmi(paw('+', '+', '+', '-')), Ids{"cd"});
  // A parallel pair is not a pair of isthmi.
  EXPECT_TRUE(find_isthmi(make_graph({"a", "b"}, {{"p", "a", "b", '+'}, {"q", "a", "b", '+'}}))
                  .empty());
  EXPECT_TRUE(find_isthmi(make_graph({"a"}, {})).empty());
}

TEST(BlocksTest, Examples) {
  auto pb = blocks(paw('+', '+', '+', '-'));
  ASSERT_EQ(pb.size(), 2u);
  auto tri = std::find_if(pb.begin(), pb.end(), [](const Block& b) { return b.nontrivial; });
  ASSERT_NE(tri, pb.end());
  EXPECT_EQ(tri->edges, (Ids{"ab", "bc", "ca"}));
  EXPECT_EQ(tri->vertices, (Ids{"a", "b", "c"}));
  auto pendant = std::find_if(pb.begin(), pb.end(), [](const Block& b) { return !b.nontrivial; });
  EXPECT_EQ(pendant->edges, Ids{"cd"});

  auto cb = blocks(circle_graph("++++"));
  ASSERT_EQ(cb.size(), 1u);
  EXPECT_TRUE(cb[0].nontrivial);
  EXPECT_EQ(cb[0].edges.size(), 4u);

  auto lb = blocks(path3());
  ASSERT_EQ(lb.size(), 3u);
  for (const Block& b : lb) {
    EXPECT_FALSE(b.nontrivial);
    EXPECT_EQ(b.edges.size(), 1u);
  }

  auto iso = blocks(make_graph({"a", "b", "z"}, {{"p", "a", "b", '+'}}));
  ASSERT_EQ(iso.size(), 2u);
  EXPECT_EQ(iso.back().vertices, Ids{"z"});
  EXPECT_TRUE(iso.back().edges.empty());
}

// Every edge is in exactly one block; isthmi are exactly the one-edge blocks.
TEST(BlocksTest, PartitionEdges) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    SignedGraph g = random_corpus_graph(3, i, 7, 12);
    std::vector<std::string> all;
    Ids single;
    for (const Block& b : blocks(g)) {
      all.insert(all.end(), b.edges.begin(), b.edges.end());
      EXPECT_EQ(b.nontrivial, b.edges.size() >= 2);
      if (b.edges.size() == 1) single.push_back(b.edges[0]);
    }
    std::sort(all.begin(), all.end());
    std::sort(single.begin(), single.end());
    EXPECT_EQ(all, g.edge_ids());
    EXPECT_EQ(single, find_isthmi(g));
  }
}

// An edge is an isthmus when deleting it disconnects its endpoints.
TEST(IsthmusTest, MatchesDeletion) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    SignedGraph g = random_corpus_graph(4, i, 7, 12);
    Ids expected;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      SignedGraph h = g.spanning_subgraph([&](EdgeIndex f) { return f != e; });
      auto [a, b] = g.endpoints(e);
      std::vector<char> seen(h.vertex_count(), 0);
      std::vector<VertexIndex> stack{a};
      seen[a] = 1;
      while (!stack.empty()) {
        VertexIndex x = stack.back();
        stack.pop_back();
        for (EdgeIndex f : h.incident_edges(x)) {
          VertexIndex y = h.other_endpoint(f, x);
          if (!seen[y]) seen[y] = 1, stack.push_back(y);
        }
      }
      if (!seen[b]) expected.push_back(g.edge_id(e));
    }
    EXPECT_EQ(find_isthmi(g), expected);
  }
}

TEST(ConditionITest, Examples) {
  expect_fail(check_condition_i(star_graph("-+++")), Clause::high_degree_not_totally_positive,
              "c");
  EXPECT_EQ(clause_name(Clause::high_degree_not_totally_positive), "degree>3 not totally positive");
  EXPECT_TRUE(check_condition_i(star_graph("+--")).line_consistent);
  expect_fail(check_condition_i(c4_with_pendant()), Clause::degree_three_positive_not_isthmus,
              "v");
  EXPECT_EQ(clause_name(Clause::degree_three_positive_not_isthmus),
            "degree-3 positive edge not an isthmus");
  expect_fail(check_condition_i(circle_graph("-++")), Clause::unbalanced, "");
}

TEST(ConditionIITest, Examples) {
  expect_fail(check_condition_ii(star_graph("---")), Clause::negative_degree_exceeds_two, "c");
  EXPECT_EQ(clause_name(Clause::negative_degree_exceeds_two), "negative-subgraph degree 3");
  EXPECT_TRUE(check_condition_ii(circle_graph("----")).line_consistent);
  expect_fail(check_condition_ii(paw('+', '+', '+', '-')),
              Clause::negative_endpoint_extra_positive, "c");
  EXPECT_EQ(clause_name(Clause::negative_endpoint_extra_positive),
            "negative-edge endpoint with two positive edges");
  expect_fail(check_condition_ii(c4_with_pendant()),
              Clause::negative_endpoint_positive_not_isthmus, "v");
}

TEST(ConditionIIITest, Examples) {
  EXPECT_TRUE(check_condition_iii(star_graph("+--")).line_consistent);
  EXPECT_TRUE(check_condition_iii(circle_graph("+++")).line_consistent);
  expect_fail(check_condition_iii(circle_graph("+-+")), Clause::unbalanced_after_isthmus_deletion,
              "");
  expect_fail(check_condition_iii(c4_with_pendant()),
              Clause::negative_endpoint_degree_after_deletion, "v");
}

TEST(Theorem1Test, Examples) {
  EXPECT_TRUE(check_theorem1_simple(star_graph("+--")).line_consistent);
  EXPECT_FALSE(check_theorem1_simple(paw('+', '+', '+', '-')).line_consistent);
  EXPECT_TRUE(check_theorem1_simple(complete_graph(4)).line_consistent);
  expect_fail(check_theorem1_simple(c4_with_pendant()),
              Clause::degree_three_negatives_miss_circle, "v");
  SignedGraph pair = make_graph({"a", "b"}, {{"p", "a", "b", '+'}, {"q", "a", "b", '-'}});
  try {
    check_theorem1_simple(pair);
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphError::Kind::not_simple);
  }
}

TEST(Corollary3Test, Examples) {
  EXPECT_EQ(check_corollary_3(complete_graph(4)), true);
  EXPECT_EQ(check_corollary_3(complete_graph(4, 1)), false);
  EXPECT_EQ(check_corollary_3(circle_graph("++++")), std::nullopt);
  EXPECT_EQ(check_corollary_3(complete_graph(3)), std::nullopt);
  // Two disjoint K4s: disconnected.
  SignedGraph k4 = complete_graph(4);
  std::vector<SignedEdge> edges;
  std::vector<std::string> vertices;
  for (const char* side : {"p", "q"}) {
    for (const auto& v : k4.vertex_ids()) vertices.push_back(side + v);
    for (const SignedEdge& e : k4.edges()) edges.push_back({side + e.id, side + e.u, side + e.v, e.sign});
  }
  EXPECT_EQ(check_corollary_3(SignedGraph(vertices, edges)), std::nullopt);
}

TEST(OracleTest, Examples) {
  EXPECT_FALSE(line_consistency_oracle(star_graph("---")).line_consistent);
  EXPECT_TRUE(line_consistency_oracle(star_graph("+--")).line_consistent);
  EXPECT_TRUE(line_consistency_oracle(circle_graph("----")).line_consistent);
  Verdict v = line_consistency_oracle(c4_with_pendant());
  EXPECT_EQ(v.failed_clause, Clause::line_graph_inconsistent);
  EXPECT_TRUE(v.witness);
}

// All characterizations agree with the definition on every small graph.
TEST(CharacterizationTest, AgreeWithBruteForce) {
  auto gen = exhaustive_signed_graphs(4, 5);
  std::size_t yes = 0, no = 0;
  while (auto g = gen.next()) {
    const bool expected = testing::brute_force_line_consistent(*g);
    expected ? ++yes : ++no;
    ASSERT_EQ(line_consistency_oracle(*g).line_consistent, expected);
    ASSERT_EQ(check_condition_i(*g).line_consistent, expected);
    ASSERT_EQ(check_condition_ii(*g).line_consistent, expected);
    ASSERT_EQ(check_condition_iii(*g).line_consistent, expected);
    if (g->is_simple()) {
      ASSERT_EQ(check_theorem1_simple(*g).line_consistent, expected);
    }
    if (auto c = check_corollary_3(*g)) {
      ASSERT_EQ(*c, expected);
    }
  }
  EXPECT_GT(yes, 0u);
  EXPECT_GT(no, 0u);
}

TEST(CharacterizationTest, AgreeWithOracleOnRandomGraphs) {
  for (std::uint64_t i = 0; i < 1500; ++i) {
    SignedGraph g = random_corpus_graph(99, i, 7, 12);
    const bool expected = line_consistency_oracle(g).line_consistent;
    for (const Verdict& v : {check_condition_i(g), check_condition_ii(g), check_condition_iii(g)}) {
      ASSERT_EQ(v.line_consistent, expected) << i;
      if (v.location) {
        EXPECT_TRUE(g.find_vertex(*v.location).has_value());
      }
    }
    if (g.is_simple()) {
      ASSERT_EQ(check_theorem1_simple(g).line_consistent, expected) << i;
    }
  }
}

TEST(Corollary3Test, CubeSignings) {
  std::vector<std::string> vs;
  for (int i = 0; i < 8; ++i) vs.push_back("q" + std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 8; ++i) {
    for (int b = 0; b < 3; ++b) {
      if (int j = i ^ (1 << b); i < j) pairs.emplace_back(i, j);
    }
  }
  for (std::uint32_t mask : {0u, 1u, 0x81u, 0xfffu, 0x5a5u}) {
    std::vector<SignedEdge> es;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      es.push_back({"e" + std::to_string(k), vs[pairs[k].first], vs[pairs[k].second],
                    mask >> k & 1 ? Sign::negative : Sign::positive});
    }
    SignedGraph cube(vs, es);
    auto c = check_corollary_3(cube);
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, mask == 0);
    EXPECT_EQ(line_consistency_oracle(cube).line_consistent, mask == 0);
  }
}

}  // namespace
}  // namespace linecons
