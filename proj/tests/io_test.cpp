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

#include "linecons/io.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "linecons/generate.hpp"
#include "linecons/line_graph.hpp"
#include "test_support.hpp"

namespace linecons {
namespace {

using testing::circle_graph;
using testing::make_graph;

std::string error_of(std::string_view text) {
  try {
    read_signed_graph(text);
  } catch (const FormatError& e) {
    return e.what();
  } catch (const GraphError& e) {
    return std::string("graph: ") + e.what();
  }
  return "";
}

TEST(ReadSignedGraphTest, Example) {
  SignedGraph g = read_signed_graph(
      R"({"vertices":["a","b"],"edges":[{"id":"e1","u":"a","v":"b","sign":"-"}]})");
  EXPECT_EQ(g.vertex_count(), 2u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.sign("e1"), Sign::negative);
}

TEST(ReadSignedGraphTest, NumericIdentifiers) {
  SignedGraph g =
      read_signed_graph(R"({"vertices":[1,2],"edges":[{"id":7,"u":1,"v":2,"sign":"+"}]})");
  EXPECT_EQ(g.vertex_ids(), (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(g.edge_ids(), std::vector<std::string>{"7"});
}

TEST(ReadSignedGraphTest, Errors) {
  auto bad_sign = error_of(R"({"vertices":["a","b"],"edges":[{"id":"e","u":"a","v":"b","sign":"x"}]})");
  EXPECT_NE(bad_sign.find("edges[0].sign"), std::string::npos) << bad_sign;
  auto bool_sign = error_of(R"({"vertices":["a","b"],"edges":[{"id":"e","u":"a","v":"b","sign":true}]})");
  EXPECT_NE(bool_sign.find("sign"), std::string::npos);
  auto loop = error_of(R"({"vertices":["a"],"edges":[{"id":"e","u":"a","v":"a","sign":"+"}]})");
  EXPECT_NE(loop.find("edges[0]"), std::string::npos);
  EXPECT_NE(loop.find("loop"), std::string::npos);
  auto dup = error_of(
      R"({"vertices":["a","b"],"edges":[{"id":"e","u":"a","v":"b","sign":"+"},{"id":"e","u":"a","v":"b","sign":"+"}]})");
  EXPECT_NE(dup.find("edges[1]"), std::string::npos);
  EXPECT_NE(dup.find("duplicate"), std::string::npos);
  auto dup_vertex = error_of(R"({"vertices":["a","a"],"edges":[]})");
  EXPECT_NE(dup_vertex.find("vertices[1]"), std::string::npos);
  auto unknown = error_of(R"({"vertices":["a"],"edges":[{"id":"e","u":"a","v":"z","sign":"+"}]})");
  EXPECT_NE(unknown.find("'z'"), std::string::npos);
  EXPECT_NE(error_of(R"({"vertices":["a"]})").find("edges"), std::string::npos);
  EXPECT_NE(error_of("[1,2]").find("object"), std::string::npos);
  EXPECT_NE(error_of("{not json").find("parse"), std::string::npos);
  EXPECT_NE(error_of(R"({"vertices":"a","edges":[]})").find("vertices"), std::string::npos);
  EXPECT_NE(error_of(R"({"vertices":["a","b"],"edges":[{"id":"e","u":"a","v":"b"}]})")
                .find("missing key \"sign\""),
            std::string::npos);
}

TEST(WriteSignedGraphTest, SortedAndCanonical) {
  SignedGraph g = make_graph({"c", "a", "b"},
                             {{"e3", "c", "a", '+'}, {"e1", "a", "b", '-'}, {"e2", "b", "c", '+'}});
  EXPECT_EQ(write_signed_graph(g),
            R"({"edges":[{"id":"e1","sign":"-","u":"a","v":"b"},)"
            R"({"id":"e2","sign":"+","u":"b","v":"c"},)"
            R"({"id":"e3","sign":"+","u":"c","v":"a"}],"vertices":["a","b","c"]})");
  EXPECT_EQ(write_signed_graph(SignedGraph()), R"({"edges":[],"vertices":[]})");
}

TEST(WriteSignedGraphTest, RoundTrip) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    SignedGraph g = random_corpus_graph(31, i, 7, 12);
    std::string text = write_signed_graph(g);
    SignedGraph back = read_signed_graph(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(write_signed_graph(back), text);
  }
}

TEST(MarkedGraphIoTest, RoundTrip) {
  MarkedGraph l = line_graph(circle_graph("+-+-"));
  std::string text = write_marked_graph(l);
  MarkedGraph back = read_marked_graph(text);
  EXPECT_EQ(write_marked_graph(back), text);
  EXPECT_TRUE(std::ranges::equal(back.marks(), l.marks()));
  EXPECT_THROW(read_marked_graph(R"({"vertices":["a"],"edges":[]})"), FormatError);
}

TEST(ResultIoTest, VerdictAndCircle) {
  Verdict v = Verdict::fail(Clause::negative_degree_exceeds_two, "c");
  v.witness = Circle{{"x", "y"}, {"a", "b"}};
  EXPECT_EQ(to_json(v).dump(),
            R"({"failed_clause":"negative-subgraph degree 3","line_consistent":false,)"
            R"("location":"c","witness":{"edges":["x","y"],"vertices":["a","b"]}})");
  EXPECT_EQ(to_json(Verdict::pass()).dump(), R"({"line_consistent":true})");
}

TEST(RecipeIoTest, RoundTripAndErrors) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Recipe r = random_recipe(seed);
    EXPECT_EQ(read_recipe(to_json(r).dump()), r);
  }
  Recipe partial = read_recipe(R"({"negative_circles":[4]})");
  EXPECT_EQ(partial.negative_circles, std::vector<std::size_t>{4});
  EXPECT_EQ(partial.core_vertices, 0u);
  EXPECT_THROW(read_recipe(R"({"core_vertices":-1})"), FormatError);
  EXPECT_THROW(read_recipe(R"({"negative_circles":4})"), FormatError);
  EXPECT_THROW(read_recipe(R"({"attach_to_core":1})"), FormatError);
}

TEST(DotTest, SignedGraph) {
  std::string dot = export_dot(make_graph({"a", "b"}, {{"e1", "a", "b", '-'}, {"e2", "a", "b", '+'}}));
  EXPECT_NE(dot.find(R"("a" -- "b" [label="e1 -", style=dashed])"), std::string::npos) << dot;
  EXPECT_NE(dot.find(R"("a" -- "b" [label="e2 +", style=solid])"), std::string::npos) << dot;
  EXPECT_EQ(dot.rfind("graph signed {", 0), 0u);
}

TEST(DotTest, MarkedGraph) {
  MarkedGraph m({{"e1", Sign::negative}, {"e2", Sign::positive}}, {{"x", "e1", "e2"}});
  std::string dot = export_dot(m);
  EXPECT_NE(dot.find(R"("e1" [label="e1 [-]"])"), std::string::npos) << dot;
  EXPECT_NE(dot.find(R"("e2" [label="e2 [+]"])"), std::string::npos) << dot;
}

TEST(DotTest, ClustersFromReport) {
  SignedGraph g = circle_graph("----");
  StructureReport r = classify_structure(g);
  std::string dot = export_dot(g, &r);
  EXPECT_EQ(dot.find("subgraph \"cluster_0\""), dot.rfind("subgraph"));
  EXPECT_NE(dot.find("label=\"circle\""), std::string::npos);
  EXPECT_NE(dot.find("comment=\"block 0\""), std::string::npos);
  EXPECT_EQ(export_dot(g, &r), dot);
}

TEST(DotTest, QuotesIdentifiers) {
  std::string dot = export_dot(make_graph({"a\"b", "c"}, {{"e", "a\"b", "c", '+'}}));
  EXPECT_NE(dot.find(R"("a\"b")"), std::string::npos) << dot;
}

}  // namespace
}  // namespace linecons
