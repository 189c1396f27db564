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

#include "linecons/core.hpp"

#include <gtest/gtest.h>

#include "linecons/generate.hpp"
#include "test_support.hpp"

namespace linecons {
namespace {

using testing::circle_graph;
using testing::make_graph;
using testing::star_graph;

TEST(SignTest, GroupLaw) {
  for (Sign s : {Sign::positive, Sign::negative}) {
    EXPECT_EQ(Sign::positive * s, s);
    EXPECT_EQ(s * Sign::positive, s);
  }
  EXPECT_EQ(Sign::negative * Sign::negative, Sign::positive);
  EXPECT_EQ(product(std::vector<Sign>{}), Sign::positive);
  EXPECT_EQ(product(std::vector<Sign>{Sign::negative, Sign::negative, Sign::negative}),
            Sign::negative);
}

TEST(SignedGraphTest, AcceptsTriangle) {
  SignedGraph g = make_graph({"a", "b", "c"},
                             {{"e1", "a", "b", '+'}, {"e2", "b", "c", '+'}, {"e3", "c", "a", '+'}});
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(SignedGraphTest, RejectsLoop) {
  try {
    make_graph({"a"}, {{"e1", "a", "a", '+'}});
    FAIL() << "loop accepted";
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphError::Kind::loop);
    EXPECT_EQ(e.identifier(), "e1");
    EXPECT_NE(std::string(e.what()).find("loop"), std::string::npos);
  }
}

TEST(SignedGraphTest, AcceptsParallelPair) {
  SignedGraph g = make_graph({"a", "b"}, {{"e1", "a", "b", '+'}, {"e2", "a", "b", '-'}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_FALSE(g.is_simple());
}

TEST(SignedGraphTest, RejectsDuplicateEdgeAndUnknownEndpoint) {
  try {
    make_graph({"a", "b"}, {{"e1", "a", "b", '+'}, {"e1", "a", "b", '-'}});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphError::Kind::duplicate_edge);
    EXPECT_EQ(e.identifier(), "e1");
  }
  try {
    make_graph({"a"}, {{"e1", "a", "z", '+'}});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphError::Kind::unknown_vertex);
    EXPECT_EQ(e.identifier(), "z");
  }
  EXPECT_THROW(make_graph({"a", "a"}, {}), GraphError);
}

TEST(SignedGraphTest, Degree) {
  EXPECT_EQ(degree(circle_graph("+++"), "c0"), 2u);
  EXPECT_EQ(degree(star_graph("+++"), "c"), 3u);
  SignedGraph pair = make_graph({"a", "b"}, {{"e1", "a", "b", '+'}, {"e2", "a", "b", '-'}});
  EXPECT_EQ(degree(pair, "a"), 2u);
  EXPECT_THROW(degree(pair, "nope"), GraphError);
}

TEST(SignedGraphTest, TotallyPositive) {
  EXPECT_TRUE(is_totally_positive(circle_graph("+++"), "c1"));
  EXPECT_FALSE(is_totally_positive(star_graph("+--"), "c"));
  EXPECT_FALSE(is_totally_negative(star_graph("+--"), "c"));
  EXPECT_TRUE(is_totally_negative(star_graph("---"), "c"));
  SignedGraph lone = make_graph({"a"}, {});
  EXPECT_TRUE(is_totally_positive(lone, "a"));
  EXPECT_TRUE(is_totally_negative(lone, "a"));
  EXPECT_THROW(is_totally_positive(lone, "b"), GraphError);
}

TEST(SignedGraphTest, NegativeSubgraph) {
  SignedGraph positive = circle_graph("+++");
  SignedGraph neg = negative_subgraph(positive);
  EXPECT_EQ(neg.vertex_ids(), positive.vertex_ids());
  EXPECT_EQ(neg.edge_count(), 0u);

  SignedGraph c4 = circle_graph("----");
  EXPECT_EQ(negative_subgraph(c4), c4);

  SignedGraph star = negative_subgraph(star_graph("+--"));
  EXPECT_EQ(star.vertex_count(), 4u);
  EXPECT_EQ(star.edge_ids(), (std::vector<std::string>{"e1", "e2"}));
  EXPECT_EQ(star.degree(star.vertex_index("l0")), 0u);
}

TEST(WalkTest, SignOfWalk) {
  EXPECT_EQ(sign_of_walk(circle_graph("+++"), Walk{{"e0", "e1", "e2"}, true}), Sign::positive);
  EXPECT_EQ(sign_of_walk(circle_graph("+-++"), Walk{{"e0", "e1", "e2", "e3"}, true}),
            Sign::negative);
  EXPECT_EQ(sign_of_walk(circle_graph("--++"), Walk{{"e0", "e1", "e2", "e3"}, true}),
            Sign::positive);
  EXPECT_EQ(sign_of_walk(circle_graph("-++"), Walk{}), Sign::positive);
}

TEST(WalkTest, RejectsInvalidWalks) {
  SignedGraph c4 = circle_graph("++++");
  EXPECT_THROW(sign_of_walk(c4, Walk{{"e0", "zz"}, false}), GraphError);
  try {
    sign_of_walk(c4, Walk{{"e0", "e2"}, false});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphError::Kind::not_a_walk);
  }
  EXPECT_THROW(sign_of_walk(c4, Walk{{"e0", "e1"}, true}), GraphError);
  // Back and forth along one edge closes.
  EXPECT_EQ(sign_of_walk(c4, Walk{{"e0", "e0"}, true}), Sign::positive);
}

TEST(WalkTest, ParallelEdgesDisambiguateTraversal) {
  // e1 e2 e3 only works read as b->a->b->c.
  SignedGraph g = make_graph({"a", "b", "c"},
                             {{"e1", "a", "b", '-'}, {"e2", "a", "b", '+'}, {"e3", "b", "c", '-'}});
  EXPECT_EQ(sign_of_walk(g, Walk{{"e1", "e2", "e3"}, false}), Sign::positive);
  EXPECT_EQ(sign_of_walk(g, Walk{{"e1", "e2"}, true}), Sign::negative);
}

TEST(CircleTest, CanonicalFormAndValidation) {
  SignedGraph c4 = circle_graph("++++");
  Circle rotated{{"e2", "e3", "e0", "e1"}, {"c2", "c3", "c0", "c1"}};
  Circle reversed{{"e3", "e2", "e1", "e0"}, {"c0", "c3", "c2", "c1"}};
  Circle expected{{"e0", "e1", "e2", "e3"}, {"c0", "c1", "c2", "c3"}};
  EXPECT_EQ(canonical(rotated), expected);
  EXPECT_EQ(canonical(reversed), expected);
  EXPECT_TRUE(is_circle_of(c4, expected));
  EXPECT_FALSE(is_circle_of(c4, Circle{{"e0", "e1", "e2"}, {"c0", "c1", "c2"}}));
  EXPECT_FALSE(is_circle_of(c4, Circle{{"e0"}, {"c0"}}));

  SignedGraph digon = make_graph({"a", "b"}, {{"x", "a", "b", '+'}, {"y", "a", "b", '-'}});
  Circle d{{"x", "y"}, {"b", "a"}};
  EXPECT_TRUE(is_circle_of(digon, d));
  EXPECT_EQ(canonical(d), (Circle{{"x", "y"}, {"a", "b"}}));
  EXPECT_EQ(sign_of_circle(digon, d), Sign::negative);
  EXPECT_FALSE(is_circle_of(digon, Circle{{"x", "x"}, {"a", "b"}}));
}

TEST(CoreProperties, DegreeSumAndConcatenation) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SignedGraph g = random_corpus_graph(seed, 0, 7, 12);
    std::size_t sum = 0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    EXPECT_EQ(sum, 2 * g.edge_count());

    SignedGraph neg = negative_subgraph(g);
    EXPECT_EQ(neg.vertex_ids(), g.vertex_ids());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      EXPECT_EQ(neg.find_edge(g.edge_id(e)).has_value(), g.sign(e) == Sign::negative);
    }

    // Walk along each vertex's incident edges pairwise: e, f share a vertex.
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      auto inc = g.incident_edges(v);
      if (inc.size() < 2) continue;
      Walk a{{g.edge_id(inc[0])}, false};
      Walk b{{g.edge_id(inc[1])}, false};
      EXPECT_EQ(sign_of_walk(g, concatenate(a, b)), sign_of_walk(g, a) * sign_of_walk(g, b));
    }
  }
}

}  // namespace
}  // namespace linecons
