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
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace linecons {

/// Circle counts grow exponentially; enumeration stops with
/// `CircleLimitExceeded` once `max_circles` would be exceeded.
struct EnumerationLimits {
  std::size_t max_circles = 1'000'000;
};

class CircleLimitExceeded : public std::runtime_error {
 public:
  explicit CircleLimitExceeded(std::size_t limit)
      : std::runtime_error("circle enumeration exceeded the limit of " +
                           std::to_string(limit) + " circles"),
        limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

namespace detail {

// Underlying simple graph of a multigraph, keeping the parallel classes.
class SimpleView {
 public:
  struct Link {
    VertexIndex to;
    std::vector<EdgeIndex> edges;  // increasing index order
  };

  explicit SimpleView(const Multigraph& g) : links_(g.vertex_count()) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      auto& links = links_[v];
      for (EdgeIndex e : g.incident_edges(v)) {
        VertexIndex w = g.other_endpoint(e, v);
        auto it = std::lower_bound(links.begin(), links.end(), w,
                                   [](const Link& l, VertexIndex x) { return l.to < x; });
        if (it == links.end() || it->to != w) it = links.insert(it, Link{w, {}});
        it->edges.push_back(e);
      }
    }
  }

  std::size_t vertex_count() const noexcept { return links_.size(); }
  const std::vector<Link>& links(VertexIndex v) const { return links_[v]; }

  const std::vector<EdgeIndex>& between(VertexIndex u, VertexIndex v) const {
    const auto& links = links_[u];
    auto it = std::lower_bound(links.begin(), links.end(), v,
                               [](const Link& l, VertexIndex x) { return l.to < x; });
    return it->edges;
  }

 private:
  std::vector<std::vector<Link>> links_;
};

// Depth-first search for vertex cycles of length >= 3 in the underlying
// simple graph. Only cycles containing an eligible vertex are visited, each
// exactly once: the cycle is rooted at its least eligible vertex and the
// direction is fixed by requiring path[1] < path.back().
template <typename Eligible, typename Visitor>
class AnchoredCycleSearch {
 public:
  AnchoredCycleSearch(const SimpleView& view, Eligible eligible, Visitor visit)
      : view_(view),
        eligible_(std::move(eligible)),
        visit_(std::move(visit)),
        on_path_(view.vertex_count(), 0) {}

  // Returns false when the visitor asked to stop.
  bool run() {
    for (VertexIndex s = 0; s < view_.vertex_count(); ++s) {
      if (!eligible_(s)) continue;
      root_ = s;
      path_.assign(1, s);
      on_path_[s] = 1;
      bool keep_going = extend(s);
      on_path_[s] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

 private:
  bool allowed(VertexIndex x) const {
    return !on_path_[x] && (x > root_ || !eligible_(x));
  }

  bool extend(VertexIndex w) {
    for (const auto& link : view_.links(w)) {
      VertexIndex x = link.to;
      if (x == root_) {
        if (path_.size() >= 3 && path_[1] < path_.back() &&
            !visit_(std::span<const VertexIndex>(path_))) {
          return false;
        }
        continue;
      }
      if (!allowed(x)) continue;
      path_.push_back(x);
      on_path_[x] = 1;
      bool keep_going = extend(x);
      on_path_[x] = 0;
      path_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const SimpleView& view_;
  Eligible eligible_;
  Visitor visit_;
  std::vector<char> on_path_;
  std::vector<VertexIndex> path_;
  VertexIndex root_ = 0;
};

template <typename Eligible, typename Visitor>
bool for_each_vertex_cycle(const SimpleView& view, Eligible eligible, Visitor visit) {
  return AnchoredCycleSearch<Eligible, Visitor>(view, std::move(eligible), std::move(visit))
      .run();
}

inline Circle make_circle(const Multigraph& g, std::span<const VertexIndex> vertices,
                          std::span<const EdgeIndex> edges) {
  Circle c;
  c.vertices.reserve(vertices.size());
  c.edges.reserve(edges.size());
  for (VertexIndex v : vertices) c.vertices.push_back(g.vertex_id(v));
  for (EdgeIndex e : edges) c.edges.push_back(g.edge_id(e));
  return canonical(c);
}

}  // namespace detail

/// Every elementary circle of `g` exactly once: digons from each unordered
/// pair of parallel edges, and every circle of length >= 3 with each choice
/// of parallel edge along it. Sorted by length, then canonical edge order.
inline std::vector<Circle> enumerate_circles(const Multigraph& g,
                                             EnumerationLimits limits = {}) {
  const detail::SimpleView view(g);
  std::vector<Circle> out;
  auto add = [&](Circle c) {
    if (out.size() >= limits.max_circles) throw CircleLimitExceeded(limits.max_circles);
    out.push_back(std::move(c));
  };

  for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
    for (const auto& link : view.links(u)) {
      if (link.to < u) continue;
      const auto& par = link.edges;
      for (std::size_t i = 0; i < par.size(); ++i) {
        for (std::size_t j = i + 1; j < par.size(); ++j) {
          const VertexIndex vs[] = {u, link.to};
          const EdgeIndex es[] = {par[i], par[j]};
          add(detail::make_circle(g, vs, es));
        }
      }
    }
  }

  std::vector<EdgeIndex> chosen;
  std::vector<std::size_t> pick;
  detail::for_each_vertex_cycle(
      view, [](VertexIndex) { return true; },
      [&](std::span<const VertexIndex> path) {
        const std::size_t n = path.size();
        std::vector<const std::vector<EdgeIndex>*> classes(n);
        for (std::size_t i = 0; i < n; ++i) {
          classes[i] = &view.between(path[i], path[(i + 1) % n]);
        }
        // Odometer over parallel-edge choices.
        pick.assign(n, 0);
        chosen.resize(n);
        while (true) {
          for (std::size_t i = 0; i < n; ++i) chosen[i] = (*classes[i])[pick[i]];
          add(detail::make_circle(g, path, chosen));
          std::size_t i = 0;
          while (i < n && ++pick[i] == classes[i]->size()) pick[i++] = 0;
          if (i == n) break;
        }
        return true;
      });

  std::sort(out.begin(), out.end(), shorter_circle);
  return out;
}

/// Definitional balance test: every circle has positive edge-sign product.
inline bool is_balanced_oracle(const SignedGraph& g, EnumerationLimits limits = {}) {
  for (const Circle& c : enumerate_circles(g, limits)) {
    Sign s = Sign::positive;
    for (const std::string& e : c.edges) s *= g.sign(e);
    if (is_negative(s)) return false;
  }
  return true;
}

namespace detail {

// Breadth-first two-colouring with vertex marks such that every edge sign
// equals the product of its endpoint marks.
struct Colouring {
  std::vector<Sign> marks;
  std::vector<std::optional<EdgeIndex>> parent_edge;
  std::vector<std::size_t> depth;
  std::optional<EdgeIndex> conflict;
};

inline Colouring two_colour(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  Colouring c{std::vector<Sign>(n, Sign::positive),
              std::vector<std::optional<EdgeIndex>>(n), std::vector<std::size_t>(n, 0),
              std::nullopt};
  std::vector<char> seen(n, 0);
  std::deque<VertexIndex> queue;
  for (VertexIndex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    queue.push_back(root);
    while (!queue.empty()) {
      VertexIndex x = queue.front();
      queue.pop_front();
      for (EdgeIndex e : g.incident_edges(x)) {
        VertexIndex y = g.other_endpoint(e, x);
        Sign wanted = c.marks[x] * g.sign(e);
        if (!seen[y]) {
          seen[y] = 1;
          c.marks[y] = wanted;
          c.parent_edge[y] = e;
          c.depth[y] = c.depth[x] + 1;
          queue.push_back(y);
        } else if (c.marks[y] != wanted) {
          c.conflict = e;
          return c;
        }
      }
    }
  }
  return c;
}

}  // namespace detail

/// Linear-time balance test by two-colouring.
inline bool is_balanced_fast(const SignedGraph& g) {
  return !detail::two_colour(g).conflict.has_value();
}

/// A negative circle of `g`, if any: the fundamental circle of the first
/// edge that contradicts the breadth-first two-colouring.
inline std::optional<Circle> negative_circle(const SignedGraph& g) {
  const detail::Colouring c = detail::two_colour(g);
  if (!c.conflict) return std::nullopt;

  auto [x, y] = g.endpoints(*c.conflict);
  std::vector<VertexIndex> up_x{x}, up_y{y};
  std::vector<EdgeIndex> edges_x, edges_y;
  VertexIndex a = x, b = y;
  auto climb = [&](VertexIndex& v, std::vector<VertexIndex>& vs, std::vector<EdgeIndex>& es) {
    EdgeIndex e = *c.parent_edge[v];
    es.push_back(e);
    v = g.other_endpoint(e, v);
    vs.push_back(v);
  };
  while (c.depth[a] > c.depth[b]) climb(a, up_x, edges_x);
  while (c.depth[b] > c.depth[a]) climb(b, up_y, edges_y);
  while (a != b) {
    climb(a, up_x, edges_x);
    climb(b, up_y, edges_y);
  }

  // x -> ... -> lca -> ... -> y, closed by the conflicting edge.
  std::vector<VertexIndex> vertices(up_x.begin(), up_x.end());
  std::vector<EdgeIndex> edges(edges_x.begin(), edges_x.end());
  for (std::size_t i = up_y.size() - 1; i-- > 0;) vertices.push_back(up_y[i]);
  for (std::size_t i = edges_y.size(); i-- > 0;) edges.push_back(edges_y[i]);
  edges.push_back(*c.conflict);
  return detail::make_circle(g, vertices, edges);
}

struct ConsistencyResult {
  bool consistent = true;
  std::optional<Circle> witness;  // a circle with negative vertex-sign product
};

/// Definitional consistency test for a vertex-signed graph: searches every
/// circle for one with negative vertex-sign product. Circles without a
/// negative vertex are positive and are not visited. `limits` bounds the
/// number of vertex cycles visited.
inline ConsistencyResult is_consistent_oracle(const MarkedGraph& m,
                                              EnumerationLimits limits = {}) {
  const detail::SimpleView view(m);
  auto negative = [&](VertexIndex v) { return is_negative(m.mark(v)); };

  for (VertexIndex u = 0; u < m.vertex_count(); ++u) {
    for (const auto& link : view.links(u)) {
      if (link.to > u && link.edges.size() >= 2 &&
          is_negative(m.mark(u) * m.mark(link.to))) {
        const VertexIndex vs[] = {u, link.to};
        const EdgeIndex es[] = {link.edges[0], link.edges[1]};
        return {false, detail::make_circle(m, vs, es)};
      }
    }
  }

  std::size_t visited = 0;
  std::optional<Circle> witness;
  detail::for_each_vertex_cycle(view, negative, [&](std::span<const VertexIndex> path) {
    if (++visited > limits.max_circles) throw CircleLimitExceeded(limits.max_circles);
    Sign s = Sign::positive;
    for (VertexIndex v : path) s *= m.mark(v);
    if (is_positive(s)) return true;
    std::vector<EdgeIndex> edges;
    edges.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
      edges.push_back(view.between(path[i], path[(i + 1) % path.size()]).front());
    }
    witness = detail::make_circle(m, path, edges);
    return false;
  });
  if (witness) return {false, std::move(witness)};
  return {true, std::nullopt};
}

}  // namespace linecons
