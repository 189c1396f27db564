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

#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace linecons {

/// Identifier of the line-graph edge joining `a` and `b` through their
/// common endpoint `shared`. The pair is ordered, so the identifier does not
/// depend on argument order; parallel edges of the source graph therefore get
/// two distinct line-graph edges, one per shared endpoint.
inline std::string line_edge_id(std::string_view a, std::string_view b,
                                std::string_view shared) {
  if (b < a) std::swap(a, b);
  std::string id;
  id.reserve(a.size() + b.size() + shared.size() + 2);
  id.append(a).append("|").append(b).append("@").append(shared);
  return id;
}

/// The vertex-signed line graph: one vertex per edge of `g`, marked with
/// that edge's sign, and one edge per pair of edges per shared endpoint.
inline MarkedGraph line_graph(const SignedGraph& g) {
  std::vector<MarkedVertex> vertices;
  vertices.reserve(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    vertices.push_back({g.edge_id(e), g.sign(e)});
  }

  std::vector<EdgeSpec> edges;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const std::string& a = g.edge_id(inc[i]);
        const std::string& b = g.edge_id(inc[j]);
        edges.push_back({line_edge_id(a, b, g.vertex_id(v)), a, b});
      }
    }
  }
  return MarkedGraph(std::move(vertices), std::move(edges));
}

/// Line-graph circle through a cyclic sequence of edges of `g` in which
/// consecutive edges meet at the listed vertex: `edges[i]` and
/// `edges[i + 1]` meet at `junctions[i]`.
inline Circle line_circle(const std::vector<std::string>& edges,
                          const std::vector<std::string>& junctions) {
  const std::size_t n = edges.size();
  Circle out;
  out.vertices = edges;
  out.edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.edges.push_back(line_edge_id(edges[i], edges[(i + 1) % n], junctions[i]));
  }
  return canonical(out);
}

/// Image L(C) of a circle of `g`. Its vertex-sign product in the line graph
/// equals the edge-sign product of `c`.
inline Circle line_image(const Circle& c) {
  std::vector<std::string> junctions;
  junctions.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    junctions.push_back(c.vertices[(i + 1) % c.size()]);
  }
  return line_circle(c.edges, junctions);
}

/// Triangles of the line graph formed by three edges meeting at one vertex
/// of `g`: one per 3-subset of the edges at each vertex of degree >= 3.
inline std::vector<Circle> vertex_triangles(const SignedGraph& g) {
  std::vector<Circle> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    const std::string& at = g.vertex_id(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        for (std::size_t k = j + 1; k < inc.size(); ++k) {
          out.push_back(line_circle(
              {g.edge_id(inc[i]), g.edge_id(inc[j]), g.edge_id(inc[k])}, {at, at, at}));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), shorter_circle);
  return out;
}

}  // namespace linecons
