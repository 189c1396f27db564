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

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"
#include "cycles.hpp"
#include "line_graph.hpp"

namespace linecons {

// ---------------------------------------------------------------------------
// Isthmi and blocks
// ---------------------------------------------------------------------------

namespace detail {

struct DfsFrame {
  VertexIndex vertex;
  std::optional<EdgeIndex> via;  // tree edge from the parent
  std::size_t next = 0;          // position in the incidence list
};

// Iterative lowpoint computation shared by bridge and block detection.
// Parallel edges are handled by skipping only the tree edge itself.
template <typename OnTreeEdgeDone, typename OnBackEdge, typename OnTreeEdgeOpen>
void lowpoint_dfs(const Multigraph& g, std::vector<std::size_t>& order,
                  std::vector<std::size_t>& low, OnTreeEdgeOpen on_open,
                  OnBackEdge on_back, OnTreeEdgeDone on_done) {
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  const std::size_t n = g.vertex_count();
  order.assign(n, unvisited);
  low.assign(n, 0);
  std::size_t counter = 0;
  std::vector<DfsFrame> stack;
  for (VertexIndex root = 0; root < n; ++root) {
    if (order[root] != unvisited) continue;
    order[root] = low[root] = counter++;
    stack.push_back({root, std::nullopt, 0});
    while (!stack.empty()) {
      DfsFrame& top = stack.back();
      auto inc = g.incident_edges(top.vertex);
      if (top.next < inc.size()) {
        EdgeIndex e = inc[top.next++];
        if (top.via && *top.via == e) continue;
        VertexIndex w = g.other_endpoint(e, top.vertex);
        if (order[w] == unvisited) {
          on_open(e);
          order[w] = low[w] = counter++;
          stack.push_back({w, e, 0});
        } else if (order[w] < order[top.vertex]) {
          on_back(e);
          low[top.vertex] = std::min(low[top.vertex], order[w]);
        }
        continue;
      }
      DfsFrame done = top;
      stack.pop_back();
      if (!stack.empty()) {
        VertexIndex parent = stack.back().vertex;
        low[parent] = std::min(low[parent], low[done.vertex]);
        on_done(*done.via, parent, done.vertex);
      }
    }
  }
}

inline std::vector<bool> isthmus_mask(const Multigraph& g) {
  std::vector<bool> mask(g.edge_count(), false);
  std::vector<std::size_t> order, low;
  lowpoint_dfs(
      g, order, low, [](EdgeIndex) {}, [](EdgeIndex) {},
      [&](EdgeIndex e, VertexIndex parent, VertexIndex child) {
        if (low[child] > order[parent]) mask[e] = true;
      });
  return mask;
}

struct BlockDecomposition {
  std::vector<std::vector<EdgeIndex>> blocks;  // edge sets, each sorted
  std::vector<std::size_t> block_of_edge;
  std::vector<VertexIndex> isolated;

  bool nontrivial(std::size_t b) const { return blocks[b].size() >= 2; }
};

inline BlockDecomposition block_decomposition(const Multigraph& g) {
  BlockDecomposition d;
  d.block_of_edge.assign(g.edge_count(), 0);
  std::vector<EdgeIndex> edge_stack;
  std::vector<std::size_t> order, low;
  lowpoint_dfs(
      g, order, low, [&](EdgeIndex e) { edge_stack.push_back(e); },
      [&](EdgeIndex e) { edge_stack.push_back(e); },
      [&](EdgeIndex e, VertexIndex parent, VertexIndex child) {
        if (low[child] < order[parent]) return;
        std::vector<EdgeIndex> block;
        while (true) {
          EdgeIndex top = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(top);
          if (top == e) break;
        }
        std::sort(block.begin(), block.end());
        d.blocks.push_back(std::move(block));
      });
  // Order blocks by their least edge identifier.
  std::sort(d.blocks.begin(), d.blocks.end());
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    for (EdgeIndex e : d.blocks[b]) d.block_of_edge[e] = b;
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) d.isolated.push_back(v);
  }
  return d;
}

}  // namespace detail

/// Edges lying on no circle, sorted by identifier.
inline std::vector<std::string> find_isthmi(const Multigraph& g) {
  const std::vector<bool> mask = detail::isthmus_mask(g);
  std::vector<std::string> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (mask[e]) out.push_back(g.edge_id(e));
  }
  return out;
}

struct Block {
  std::vector<std::string> vertices;  // sorted
  std::vector<std::string> edges;     // sorted; empty for an isolated vertex
  bool nontrivial = false;            // contains a circle

  friend bool operator==(const Block&, const Block&) = default;
};

/// Maximal blocks: biconnected edge sets, isthmi, and isolated vertices.
inline std::vector<Block> blocks(const Multigraph& g) {
  const detail::BlockDecomposition d = detail::block_decomposition(g);
  std::vector<Block> out;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    Block block;
    block.nontrivial = d.nontrivial(b);
    for (EdgeIndex e : d.blocks[b]) {
      block.edges.push_back(g.edge_id(e));
      auto [x, y] = g.endpoints(e);
      block.vertices.push_back(g.vertex_id(x));
      block.vertices.push_back(g.vertex_id(y));
    }
    std::sort(block.vertices.begin(), block.vertices.end());
    block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()),
                         block.vertices.end());
    out.push_back(std::move(block));
  }
  for (VertexIndex v : d.isolated) out.push_back({{g.vertex_id(v)}, {}, false});
  return out;
}

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

/// The clause of a criterion that a graph failed.
enum class Clause {
  unbalanced,
  high_degree_not_totally_positive,
  degree_three_sign_pattern,
  degree_three_positive_not_isthmus,
  negative_degree_exceeds_two,
  negative_endpoint_extra_positive,
  negative_endpoint_positive_not_isthmus,
  unbalanced_after_isthmus_deletion,
  negative_endpoint_degree_after_deletion,
  degree_three_negatives_miss_circle,
  component_not_path_or_circle,
  circle_component_not_block,
  circle_component_extra_edge,
  path_not_induced,
  path_endpoint_degree,
  path_internal_extra_edge,
  path_neither_block_nor_isthmi,
  line_graph_inconsistent,
};

inline constexpr std::string_view clause_name(Clause c) noexcept {
  switch (c) {
    case Clause::unbalanced: return "unbalanced";
    case Clause::high_degree_not_totally_positive: return "degree>3 not totally positive";
    case Clause::degree_three_sign_pattern:
      return "degree-3 vertex neither totally positive nor with exactly one positive edge";
    case Clause::degree_three_positive_not_isthmus:
      return "degree-3 positive edge not an isthmus";
    case Clause::negative_degree_exceeds_two: return "negative-subgraph degree 3";
    case Clause::negative_endpoint_extra_positive:
      return "negative-edge endpoint with two positive edges";
    case Clause::negative_endpoint_positive_not_isthmus:
      return "negative-degree-2 vertex with a positive edge that is not an isthmus";
    case Clause::unbalanced_after_isthmus_deletion:
      return "unbalanced after deleting positive isthmi";
    case Clause::negative_endpoint_degree_after_deletion:
      return "negative-edge endpoint of degree>2 after deleting positive isthmi";
    case Clause::degree_three_negatives_miss_circle:
      return "degree-3 vertex whose two negative edges miss a circle through it";
    case Clause::component_not_path_or_circle:
      return "negative component not a circle, path or single vertex";
    case Clause::circle_component_not_block: return "negative circle not a block";
    case Clause::circle_component_extra_edge:
      return "negative-circle vertex with an extra edge that is not a positive isthmus";
    case Clause::path_not_induced:
      return "negative path neither induced nor closed by one positive edge into a block";
    case Clause::path_endpoint_degree: return "negative-path endpoint of degree>2";
    case Clause::path_internal_extra_edge:
      return "negative-path internal vertex with an extra edge that is not a positive isthmus";
    case Clause::path_neither_block_nor_isthmi:
      return "negative path neither inside a nontrivial block nor made of isthmi away from blocks";
    case Clause::line_graph_inconsistent: return "line graph has a negative circle";
  }
  return "unknown";
}

/// Line-consistency decision. A negative verdict names the failed clause and
/// where it failed; `witness`, when present, is a circle of the line graph
/// with negative vertex-sign product.
struct Verdict {
  bool line_consistent = true;
  std::optional<Clause> failed_clause;
  std::optional<std::string> location;
  std::optional<Circle> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Clause c, std::optional<std::string> where = std::nullopt) {
    return {false, c, std::move(where), std::nullopt};
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// ---------------------------------------------------------------------------
// Characterizations
// ---------------------------------------------------------------------------

namespace detail {

// Degree clauses shared by conditions (i) and (iii): vertices of degree > 3
// are totally positive; degree-3 vertices are totally positive or have
// exactly one positive edge.
inline std::optional<Verdict> check_degree_profile(const SignedGraph& g) {
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = g.degree(v);
    const std::size_t negatives = g.count_incident(v, Sign::negative);
    if (negatives == 0 || d < 3) continue;
    if (d > 3) return Verdict::fail(Clause::high_degree_not_totally_positive, g.vertex_id(v));
    if (d - negatives != 1) return Verdict::fail(Clause::degree_three_sign_pattern, g.vertex_id(v));
  }
  return std::nullopt;
}

inline std::optional<EdgeIndex> only_incident(const SignedGraph& g, VertexIndex v, Sign s) {
  for (EdgeIndex e : g.incident_edges(v)) {
    if (g.sign(e) == s) return e;
  }
  return std::nullopt;
}

}  // namespace detail

/// Balanced; degree > 3 totally positive; degree 3 totally positive or with
/// exactly one positive edge, which is an isthmus.
inline Verdict check_condition_i(const SignedGraph& g) {
  if (!is_balanced_fast(g)) return Verdict::fail(Clause::unbalanced);
  if (auto failed = detail::check_degree_profile(g)) return *failed;
  const std::vector<bool> isthmus = detail::isthmus_mask(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3 || g.count_incident(v, Sign::negative) == 0) continue;
    EdgeIndex f = *detail::only_incident(g, v, Sign::positive);
    if (!isthmus[f]) return Verdict::fail(Clause::degree_three_positive_not_isthmus, g.vertex_id(v));
  }
  return Verdict::pass();
}

/// Balanced; the negative subgraph has maximum degree 2 (a disjoint union of
/// paths and circles); each endpoint of a negative edge has at most one
/// positive edge, which is an isthmus when the endpoint has negative degree 2.
///
/// This is the production checker: local degree counts, one bridge pass and
/// one balance pass.
inline Verdict check_condition_ii(const SignedGraph& g) {
  if (!is_balanced_fast(g)) return Verdict::fail(Clause::unbalanced);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.count_incident(v, Sign::negative) > 2) {
      return Verdict::fail(Clause::negative_degree_exceeds_two, g.vertex_id(v));
    }
  }
  std::optional<std::vector<bool>> isthmus;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t negatives = g.count_incident(v, Sign::negative);
    if (negatives == 0) continue;
    const std::size_t positives = g.degree(v) - negatives;
    if (positives > 1) {
      return Verdict::fail(Clause::negative_endpoint_extra_positive, g.vertex_id(v));
    }
    if (positives == 1 && negatives == 2) {
      if (!isthmus) isthmus = detail::isthmus_mask(g);
      if (!(*isthmus)[*detail::only_incident(g, v, Sign::positive)]) {
        return Verdict::fail(Clause::negative_endpoint_positive_not_isthmus, g.vertex_id(v));
      }
    }
  }
  return Verdict::pass();
}

/// Degree > 3 totally positive; degree 3 totally positive or with exactly one
/// positive edge; after deleting every positive isthmus the graph is balanced
/// and both endpoints of each negative edge have degree at most 2.
inline Verdict check_condition_iii(const SignedGraph& g) {
  if (auto failed = detail::check_degree_profile(g)) return *failed;
  const std::vector<bool> isthmus = detail::isthmus_mask(g);
  const SignedGraph reduced = g.spanning_subgraph(
      [&](EdgeIndex e) { return !(isthmus[e] && is_positive(g.sign(e))); });
  if (!is_balanced_fast(reduced)) return Verdict::fail(Clause::unbalanced_after_isthmus_deletion);
  for (VertexIndex v = 0; v < reduced.vertex_count(); ++v) {
    if (reduced.count_incident(v, Sign::negative) > 0 && reduced.degree(v) > 2) {
      return Verdict::fail(Clause::negative_endpoint_degree_after_deletion,
                           reduced.vertex_id(v));
    }
  }
  return Verdict::pass();
}

/// Criterion for simple graphs: balanced; degree > 3 totally positive; each
/// degree-3 vertex totally positive or with exactly two negative edges that
/// both lie on every circle through it. Circles come from full enumeration.
inline Verdict check_theorem1_simple(const SignedGraph& g, EnumerationLimits limits = {}) {
  if (!g.is_simple()) {
    throw GraphError(GraphError::Kind::not_simple, "",
                     "the simple-graph criterion requires a simple graph");
  }
  if (!is_balanced_fast(g)) return Verdict::fail(Clause::unbalanced);
  std::optional<std::vector<Circle>> circles;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = g.degree(v);
    const std::size_t negatives = g.count_incident(v, Sign::negative);
    if (negatives == 0 || d < 3) continue;
    if (d > 3) return Verdict::fail(Clause::high_degree_not_totally_positive, g.vertex_id(v));
    if (negatives != 2) return Verdict::fail(Clause::degree_three_sign_pattern, g.vertex_id(v));
    if (!circles) circles = enumerate_circles(g, limits);
    const std::string& id = g.vertex_id(v);
    for (const Circle& c : *circles) {
      if (!c.contains_vertex(id)) continue;
      for (EdgeIndex e : g.incident_edges(v)) {
        if (is_negative(g.sign(e)) && !c.contains_edge(g.edge_id(e))) {
          return Verdict::fail(Clause::degree_three_negatives_miss_circle, id);
        }
      }
    }
  }
  return Verdict::pass();
}

/// For graphs of order >= 4 that are connected, bridgeless and have no
/// divalent vertex: line consistent exactly when all edges are positive.
/// Returns nullopt when the graph is outside that class.
inline std::optional<bool> check_corollary_3(const SignedGraph& g) {
  if (g.vertex_count() < 4) return std::nullopt;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 2) return std::nullopt;
  }
  const std::vector<bool> isthmus = detail::isthmus_mask(g);
  if (std::find(isthmus.begin(), isthmus.end(), true) != isthmus.end()) return std::nullopt;

  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexIndex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexIndex x = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.incident_edges(x)) {
      VertexIndex y = g.other_endpoint(e, x);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != g.vertex_count()) return std::nullopt;

  auto signs = g.signs();
  return std::all_of(signs.begin(), signs.end(), [](Sign s) { return is_positive(s); });
}

/// Line consistency by definition: the consistency oracle run on the line
/// graph. The witness, if any, is the oracle's negative circle.
inline Verdict line_consistency_oracle(const SignedGraph& g, EnumerationLimits limits = {}) {
  ConsistencyResult r = is_consistent_oracle(line_graph(g), limits);
  if (r.consistent) return Verdict::pass();
  Verdict v = Verdict::fail(Clause::line_graph_inconsistent);
  v.witness = std::move(r.witness);
  return v;
}

}  // namespace linecons
