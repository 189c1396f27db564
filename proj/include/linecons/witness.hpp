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
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "core.hpp"
#include "cycles.hpp"
#include "line_graph.hpp"

namespace linecons {

namespace detail {

// Least (canonical order) triangle of edges at `v` with an odd number of
// negative edges.
inline std::optional<Circle> vertex_triangle_witness(const SignedGraph& g, VertexIndex v) {
  auto inc = g.incident_edges(v);
  const std::string& at = g.vertex_id(v);
  std::optional<Circle> best;
  for (std::size_t i = 0; i < inc.size(); ++i) {
    for (std::size_t j = i + 1; j < inc.size(); ++j) {
      for (std::size_t k = j + 1; k < inc.size(); ++k) {
        if (is_positive(g.sign(inc[i]) * g.sign(inc[j]) * g.sign(inc[k]))) continue;
        Circle c = line_circle({g.edge_id(inc[i]), g.edge_id(inc[j]), g.edge_id(inc[k])},
                               {at, at, at});
        if (!best || c < *best) best = std::move(c);
      }
    }
  }
  return best;
}

// Shortest path from `from` to `to` that does not use `avoid`, as a list of
// edges in traversal order.
inline std::optional<std::vector<EdgeIndex>> shortest_path_avoiding(const Multigraph& g,
                                                                    VertexIndex from,
                                                                    VertexIndex to,
                                                                    EdgeIndex avoid) {
  std::vector<std::optional<EdgeIndex>> parent(g.vertex_count());
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<VertexIndex> queue{from};
  seen[from] = 1;
  while (!queue.empty() && !seen[to]) {
    VertexIndex x = queue.front();
    queue.pop_front();
    for (EdgeIndex e : g.incident_edges(x)) {
      if (e == avoid) continue;
      VertexIndex y = g.other_endpoint(e, x);
      if (seen[y]) continue;
      seen[y] = 1;
      parent[y] = e;
      queue.push_back(y);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<EdgeIndex> path;
  for (VertexIndex x = to; x != from;) {
    EdgeIndex e = *parent[x];
    path.push_back(e);
    x = g.other_endpoint(e, x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// At a degree-3 vertex with negative edges e, e' and a positive edge f lying
// on a circle C: C passes through f and one of e, e'. Either L(C) is
// negative, or the circle of the line graph that inserts the other negative
// edge between f and its neighbour on C is.
inline std::optional<Circle> interposed_witness(const SignedGraph& g, VertexIndex v) {
  if (g.degree(v) != 3 || g.count_incident(v, Sign::negative) != 2) return std::nullopt;
  EdgeIndex f = 0;
  for (EdgeIndex e : g.incident_edges(v)) {
    if (is_positive(g.sign(e))) f = e;
  }
  const VertexIndex w = g.other_endpoint(f, v);
  auto path = shortest_path_avoiding(g, w, v, f);
  if (!path) return std::nullopt;  // f is an isthmus

  std::vector<std::string> sequence{g.edge_id(f)};
  std::vector<std::string> junctions{g.vertex_id(w)};
  Sign circle_sign = g.sign(f);
  VertexIndex at = w;
  for (EdgeIndex e : *path) {
    at = g.other_endpoint(e, at);
    sequence.push_back(g.edge_id(e));
    junctions.push_back(g.vertex_id(at));
    circle_sign *= g.sign(e);
  }
  // `junctions.back()` is v, where the last path edge meets f.
  if (is_negative(circle_sign)) return line_circle(sequence, junctions);

  EdgeIndex other = f;
  for (EdgeIndex e : g.incident_edges(v)) {
    if (e != f && e != path->back()) other = e;
  }
  sequence.push_back(g.edge_id(other));
  junctions.push_back(g.vertex_id(v));
  return line_circle(sequence, junctions);
}

inline std::optional<Circle> unbalance_witness(const SignedGraph& g) {
  if (auto c = negative_circle(g)) return line_image(*c);
  return std::nullopt;
}

inline bool is_negative_circle_of(const MarkedGraph& line, const Circle& c) {
  return is_circle_of(line, c) && is_negative(circle_vertex_sign(line, c));
}

}  // namespace detail

/// A circle of the line graph with negative vertex-sign product, built from
/// the clause that `failed` reports: the image of a negative circle for
/// unbalance, a vertex triangle for a bad sign pattern at a vertex, or the
/// interposed circle for a positive edge that is not an isthmus. Among the
/// candidates the shortest wins (ties by canonical order). When no
/// construction applies the consistency oracle supplies the witness.
///
/// Throws std::invalid_argument if `failed` is a positive verdict and
/// std::logic_error if the line graph turns out to be consistent.
inline Circle find_witness(const SignedGraph& g, const Verdict& failed,
                           EnumerationLimits limits = {}) {
  if (failed.line_consistent) {
    throw std::invalid_argument("find_witness called with a positive verdict");
  }
  const MarkedGraph line = line_graph(g);

  std::vector<Circle> candidates;
  auto offer = [&](std::optional<Circle> c) {
    if (c && detail::is_negative_circle_of(line, *c)) candidates.push_back(std::move(*c));
  };
  auto best = [&]() {
    return *std::min_element(candidates.begin(), candidates.end(), shorter_circle);
  };

  std::optional<VertexIndex> at;
  if (failed.location) at = g.find_vertex(*failed.location);

  switch (failed.failed_clause.value_or(Clause::line_graph_inconsistent)) {
    case Clause::unbalanced:
    case Clause::unbalanced_after_isthmus_deletion:
      offer(detail::unbalance_witness(g));
      break;
    case Clause::high_degree_not_totally_positive:
    case Clause::degree_three_sign_pattern:
    case Clause::negative_degree_exceeds_two:
    case Clause::negative_endpoint_extra_positive:
      if (at) offer(detail::vertex_triangle_witness(g, *at));
      break;
    case Clause::degree_three_positive_not_isthmus:
    case Clause::negative_endpoint_positive_not_isthmus:
    case Clause::negative_endpoint_degree_after_deletion:
    case Clause::degree_three_negatives_miss_circle:
      if (at) {
        offer(detail::interposed_witness(g, *at));
        offer(detail::vertex_triangle_witness(g, *at));
      }
      break;
    default:
      if (failed.witness) offer(*failed.witness);
      break;
  }
  if (!candidates.empty()) return best();

  offer(detail::unbalance_witness(g));
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    offer(detail::vertex_triangle_witness(g, v));
    offer(detail::interposed_witness(g, v));
  }
  if (!candidates.empty()) return best();

  ConsistencyResult r = is_consistent_oracle(line, limits);
  if (r.consistent) throw std::logic_error("line graph is consistent; no witness exists");
  return *r.witness;
}

/// `v` with its witness filled in (unchanged if positive).
inline Verdict with_witness(const SignedGraph& g, Verdict v, EnumerationLimits limits = {}) {
  if (!v.line_consistent) v.witness = find_witness(g, v, limits);
  return v;
}

}  // namespace linecons
