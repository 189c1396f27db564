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
#include <string>
#include <string_view>
#include <vector>

#include "analysis.hpp"
#include "core.hpp"
#include "cycles.hpp"

namespace linecons {

enum class ComponentKind { single_vertex, nontrivial_path, circle, irregular };

/// How a negative path sits in the graph: induced, or all but one edge of a
/// circle that is a block, closed by a positive edge.
enum class PathShape { induced, closes_circle_block, neither };

/// Path case (a): inside a nontrivial block. Case (b): made of isthmi with
/// endpoints off every nontrivial block.
enum class PathCase { in_nontrivial_block, all_isthmi, neither };

inline constexpr std::string_view kind_name(ComponentKind k) noexcept {
  switch (k) {
    case ComponentKind::single_vertex: return "single-vertex";
    case ComponentKind::nontrivial_path: return "nontrivial-path";
    case ComponentKind::circle: return "circle";
    case ComponentKind::irregular: return "irregular";
  }
  return "unknown";
}

inline constexpr std::string_view shape_name(PathShape s) noexcept {
  switch (s) {
    case PathShape::induced: return "induced";
    case PathShape::closes_circle_block: return "closes-circle-block";
    case PathShape::neither: return "neither";
  }
  return "unknown";
}

inline constexpr std::string_view case_name(PathCase c) noexcept {
  switch (c) {
    case PathCase::in_nontrivial_block: return "in-nontrivial-block";
    case PathCase::all_isthmi: return "all-isthmi";
    case PathCase::neither: return "neither";
  }
  return "unknown";
}

/// Edges at a vertex besides those of its negative component.
struct ExtraEdges {
  std::string vertex;
  std::vector<std::string> edges;
  bool ok = true;  // at most one, and it is a positive isthmus

  friend bool operator==(const ExtraEdges&, const ExtraEdges&) = default;
};

struct ComponentReport {
  ComponentKind kind = ComponentKind::single_vertex;
  /// Path order for paths (from the endpoint with the smaller identifier),
  /// sorted otherwise.
  std::vector<std::string> vertices;
  std::vector<std::string> edges;

  std::optional<bool> circle_is_block;
  /// Circle vertices, or internal path vertices, that carry extra edges.
  std::vector<ExtraEdges> extra_edges;
  std::optional<PathShape> path_shape;
  std::optional<bool> endpoints_at_most_divalent;
  std::optional<PathCase> path_case;
  /// Consequences that hold automatically for a valid path: divalent
  /// endpoints in case (a), positive-isthmus second edges in case (b).
  /// Reported, never enforced.
  std::optional<bool> consequences_hold;

  std::vector<Clause> violations;

  bool satisfied() const noexcept { return violations.empty(); }

  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

/// Classification of the negative-subgraph components of a signed graph.
struct StructureReport {
  bool balanced = true;
  std::vector<ComponentReport> components;
  std::vector<Block> nontrivial_blocks;
  bool line_consistent = true;

  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

inline StructureReport classify_structure(const SignedGraph& g) {
  StructureReport report;
  report.balanced = is_balanced_fast(g);

  const std::vector<bool> isthmus = detail::isthmus_mask(g);
  const detail::BlockDecomposition blocks = detail::block_decomposition(g);
  for (const Block& b : linecons::blocks(g)) {
    if (b.nontrivial) report.nontrivial_blocks.push_back(b);
  }

  std::vector<char> in_nontrivial_block(g.vertex_count(), 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (blocks.nontrivial(blocks.block_of_edge[e])) {
      auto [x, y] = g.endpoints(e);
      in_nontrivial_block[x] = in_nontrivial_block[y] = 1;
    }
  }

  auto negative = [&](EdgeIndex e) { return is_negative(g.sign(e)); };
  auto positive_isthmus = [&](EdgeIndex e) { return isthmus[e] && !negative(e); };
  auto negative_degree = [&](VertexIndex v) { return g.count_incident(v, Sign::negative); };

  // The edge set `edges` is exactly one block of the graph.
  auto is_exact_block = [&](const std::vector<EdgeIndex>& edges) {
    const std::size_t b = blocks.block_of_edge[edges.front()];
    return blocks.blocks[b].size() == edges.size() &&
           std::all_of(edges.begin(), edges.end(),
                       [&](EdgeIndex e) { return blocks.block_of_edge[e] == b; });
  };

  auto extras_at = [&](VertexIndex v) {
    ExtraEdges x{g.vertex_id(v), {}, true};
    for (EdgeIndex e : g.incident_edges(v)) {
      if (negative(e)) continue;
      x.edges.push_back(g.edge_id(e));
      if (!positive_isthmus(e)) x.ok = false;
    }
    if (x.edges.size() > 1) x.ok = false;
    return x;
  };

  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexIndex root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;

    // Component of the negative subgraph containing `root`.
    std::vector<VertexIndex> comp_vertices{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < comp_vertices.size(); ++i) {
      VertexIndex x = comp_vertices[i];
      for (EdgeIndex e : g.incident_edges(x)) {
        VertexIndex y = g.other_endpoint(e, x);
        if (negative(e) && !seen[y]) {
          seen[y] = 1;
          comp_vertices.push_back(y);
        }
      }
    }
    std::vector<EdgeIndex> comp_edges;
    for (VertexIndex x : comp_vertices) {
      for (EdgeIndex e : g.incident_edges(x)) {
        if (negative(e)) comp_edges.push_back(e);
      }
    }
    std::sort(comp_vertices.begin(), comp_vertices.end());
    std::sort(comp_edges.begin(), comp_edges.end());
    comp_edges.erase(std::unique(comp_edges.begin(), comp_edges.end()), comp_edges.end());

    ComponentReport c;
    std::vector<VertexIndex> endpoints;
    bool irregular = false;
    for (VertexIndex v : comp_vertices) {
      const std::size_t d = negative_degree(v);
      if (d > 2) irregular = true;
      if (d == 1) endpoints.push_back(v);
    }
    for (EdgeIndex e : comp_edges) c.edges.push_back(g.edge_id(e));

    if (comp_edges.empty()) {
      c.kind = ComponentKind::single_vertex;
      c.vertices.push_back(g.vertex_id(root));
    } else if (irregular) {
      c.kind = ComponentKind::irregular;
      for (VertexIndex v : comp_vertices) c.vertices.push_back(g.vertex_id(v));
      c.violations.push_back(Clause::component_not_path_or_circle);
    } else if (endpoints.empty()) {
      c.kind = ComponentKind::circle;
      for (VertexIndex v : comp_vertices) c.vertices.push_back(g.vertex_id(v));
      c.circle_is_block = is_exact_block(comp_edges);
      if (!*c.circle_is_block) c.violations.push_back(Clause::circle_component_not_block);
      bool extras_ok = true;
      for (VertexIndex v : comp_vertices) {
        ExtraEdges x = extras_at(v);
        extras_ok = extras_ok && x.ok;
        if (!x.edges.empty()) c.extra_edges.push_back(std::move(x));
      }
      if (!extras_ok) c.violations.push_back(Clause::circle_component_extra_edge);
    } else {
      c.kind = ComponentKind::nontrivial_path;
      // Walk the path from the endpoint with the smaller identifier.
      std::vector<VertexIndex> order{endpoints.front()};
      std::optional<EdgeIndex> came_by;
      while (order.size() < comp_vertices.size()) {
        VertexIndex x = order.back();
        for (EdgeIndex e : g.incident_edges(x)) {
          if (negative(e) && e != came_by) {
            came_by = e;
            order.push_back(g.other_endpoint(e, x));
            break;
          }
        }
      }
      for (VertexIndex v : order) c.vertices.push_back(g.vertex_id(v));
      const VertexIndex first = order.front();
      const VertexIndex last = order.back();

      auto on_path = [&](VertexIndex v) {
        return std::binary_search(comp_vertices.begin(), comp_vertices.end(), v);
      };
      std::vector<EdgeIndex> chords;  // non-path edges joining two path vertices
      for (VertexIndex v : comp_vertices) {
        for (EdgeIndex e : g.incident_edges(v)) {
          if (negative(e)) continue;
          VertexIndex w = g.other_endpoint(e, v);
          if (w > v && on_path(w)) chords.push_back(e);
        }
      }
      if (chords.empty()) {
        c.path_shape = PathShape::induced;
      } else {
        c.path_shape = PathShape::neither;
        if (chords.size() == 1) {
          auto [x, y] = g.endpoints(chords.front());
          std::vector<EdgeIndex> closed = comp_edges;
          closed.push_back(chords.front());
          if (((x == first && y == last) || (x == last && y == first)) &&
              is_exact_block(closed)) {
            c.path_shape = PathShape::closes_circle_block;
          }
        }
      }
      if (*c.path_shape == PathShape::neither) c.violations.push_back(Clause::path_not_induced);

      c.endpoints_at_most_divalent = g.degree(first) <= 2 && g.degree(last) <= 2;
      if (!*c.endpoints_at_most_divalent) c.violations.push_back(Clause::path_endpoint_degree);

      bool extras_ok = true;
      for (std::size_t i = 1; i + 1 < order.size(); ++i) {
        ExtraEdges x = extras_at(order[i]);
        extras_ok = extras_ok && x.ok;
        if (!x.edges.empty()) c.extra_edges.push_back(std::move(x));
      }
      if (!extras_ok) c.violations.push_back(Clause::path_internal_extra_edge);

      const std::size_t b = blocks.block_of_edge[comp_edges.front()];
      const bool in_block =
          blocks.nontrivial(b) && std::all_of(comp_edges.begin(), comp_edges.end(), [&](EdgeIndex e) {
            return blocks.block_of_edge[e] == b;
          });
      const bool all_isthmi =
          std::all_of(comp_edges.begin(), comp_edges.end(), [&](EdgeIndex e) { return isthmus[e]; }) &&
          !in_nontrivial_block[first] && !in_nontrivial_block[last];
      if (in_block) {
        c.path_case = PathCase::in_nontrivial_block;
        c.consequences_hold = g.degree(first) == 2 && g.degree(last) == 2;
      } else if (all_isthmi) {
        c.path_case = PathCase::all_isthmi;
        bool second_edges_ok = true;
        for (VertexIndex end : {first, last}) {
          for (EdgeIndex e : g.incident_edges(end)) {
            if (!negative(e) && !positive_isthmus(e)) second_edges_ok = false;
          }
        }
        c.consequences_hold = second_edges_ok;
      } else {
        c.path_case = PathCase::neither;
        c.violations.push_back(Clause::path_neither_block_nor_isthmi);
      }
    }
    report.components.push_back(std::move(c));
  }

  report.line_consistent =
      report.balanced && std::all_of(report.components.begin(), report.components.end(),
                                     [](const ComponentReport& c) { return c.satisfied(); });
  return report;
}

/// Verdict view of a structure report: the first failed clause, located at
/// the first vertex of the offending component.
inline Verdict structure_verdict(const StructureReport& report) {
  if (!report.balanced) return Verdict::fail(Clause::unbalanced);
  for (const ComponentReport& c : report.components) {
    if (!c.satisfied()) return Verdict::fail(c.violations.front(), c.vertices.front());
  }
  return Verdict::pass();
}

inline Verdict check_structure(const SignedGraph& g) {
  return structure_verdict(classify_structure(g));
}

}  // namespace linecons
