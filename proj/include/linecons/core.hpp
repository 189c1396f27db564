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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linecons {

// ---------------------------------------------------------------------------
// Signs
// ---------------------------------------------------------------------------

/// An element of the two-element sign group {+, -}.
enum class Sign : std::int8_t { positive = 1, negative = -1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::positive : Sign::negative;
}

constexpr Sign& operator*=(Sign& a, Sign b) noexcept { return a = a * b; }

constexpr bool is_positive(Sign s) noexcept { return s == Sign::positive; }
constexpr bool is_negative(Sign s) noexcept { return s == Sign::negative; }

constexpr char sign_char(Sign s) noexcept {
  return s == Sign::positive ? '+' : '-';
}

/// Product of a range of signs; the empty product is positive.
template <typename Range>
constexpr Sign product(const Range& signs) noexcept {
  Sign result = Sign::positive;
  for (Sign s : signs) result *= s;
  return result;
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Raised when a graph, walk or circle violates the data-model invariants.
class GraphError : public std::invalid_argument {
 public:
  enum class Kind {
    loop,
    duplicate_vertex,
    duplicate_edge,
    unknown_vertex,
    unknown_edge,
    not_a_walk,
    not_a_circle,
    not_simple,
  };

  GraphError(Kind kind, std::string identifier, const std::string& message)
      : std::invalid_argument(message),
        kind_(kind),
        identifier_(std::move(identifier)) {}

  Kind kind() const noexcept { return kind_; }
  /// The offending vertex or edge identifier (empty when not applicable).
  const std::string& identifier() const noexcept { return identifier_; }

 private:
  Kind kind_;
  std::string identifier_;
};

// ---------------------------------------------------------------------------
// Multigraph topology
// ---------------------------------------------------------------------------

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct EdgeSpec {
  std::string id;
  std::string u;
  std::string v;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Loopless multigraph with string-identified vertices and edges.
///
/// Vertices and edges are stored sorted by identifier, so indices follow
/// lexicographic identifier order. Parallel edges are distinguished by their
/// identifiers. Instances are immutable once constructed.
class Multigraph {
 public:
  Multigraph() = default;

  Multigraph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
    std::sort(vertices.begin(), vertices.end());
    if (auto dup = std::adjacent_find(vertices.begin(), vertices.end());
        dup != vertices.end()) {
      throw GraphError(GraphError::Kind::duplicate_vertex, *dup,
                       "duplicate vertex '" + *dup + "'");
    }
    std::sort(edges.begin(), edges.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (edges[i - 1].id == edges[i].id) {
        throw GraphError(GraphError::Kind::duplicate_edge, edges[i].id,
                         "duplicate edge '" + edges[i].id + "'");
      }
    }

    vertex_ids_ = std::move(vertices);
    incidence_.resize(vertex_ids_.size());
    edge_ids_.reserve(edges.size());
    endpoints_.reserve(edges.size());
    for (EdgeIndex e = 0; e < edges.size(); ++e) {
      const EdgeSpec& spec = edges[e];
      if (spec.u == spec.v) {
        throw GraphError(GraphError::Kind::loop, spec.id,
                         "loop edge '" + spec.id + "' at vertex '" + spec.u +
                             "'");
      }
      auto u = find_vertex(spec.u);
      auto v = find_vertex(spec.v);
      if (!u || !v) {
        const std::string& missing = u ? spec.v : spec.u;
        throw GraphError(GraphError::Kind::unknown_vertex, missing,
                         "edge '" + spec.id + "' has endpoint '" + missing +
                             "' outside the vertex set");
      }
      edge_ids_.push_back(spec.id);
      endpoints_.emplace_back(*u, *v);
      incidence_[*u].push_back(e);
      incidence_[*v].push_back(e);
    }
  }

  std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_ids_.size(); }

  const std::vector<std::string>& vertex_ids() const noexcept {
    return vertex_ids_;
  }
  const std::vector<std::string>& edge_ids() const noexcept { return edge_ids_; }

  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_.at(v); }
  const std::string& edge_id(EdgeIndex e) const { return edge_ids_.at(e); }

  std::optional<VertexIndex> find_vertex(std::string_view id) const noexcept {
    return find_sorted(vertex_ids_, id);
  }
  std::optional<EdgeIndex> find_edge(std::string_view id) const noexcept {
    return find_sorted(edge_ids_, id);
  }

  VertexIndex vertex_index(std::string_view id) const {
    if (auto v = find_vertex(id)) return *v;
    throw GraphError(GraphError::Kind::unknown_vertex, std::string(id),
                     "unknown vertex '" + std::string(id) + "'");
  }
  EdgeIndex edge_index(std::string_view id) const {
    if (auto e = find_edge(id)) return *e;
    throw GraphError(GraphError::Kind::unknown_edge, std::string(id),
                     "unknown edge '" + std::string(id) + "'");
  }

  std::pair<VertexIndex, VertexIndex> endpoints(EdgeIndex e) const {
    return endpoints_.at(e);
  }

  VertexIndex other_endpoint(EdgeIndex e, VertexIndex v) const {
    auto [a, b] = endpoints_.at(e);
    return a == v ? b : a;
  }

  bool is_incident(EdgeIndex e, VertexIndex v) const {
    auto [a, b] = endpoints_.at(e);
    return a == v || b == v;
  }

  /// Incident edges in increasing index order.
  std::span<const EdgeIndex> incident_edges(VertexIndex v) const {
    return incidence_.at(v);
  }

  std::size_t degree(VertexIndex v) const { return incidence_.at(v).size(); }

  /// No two edges share the same pair of endpoints.
  bool is_simple() const {
    std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
    pairs.reserve(endpoints_.size());
    for (auto [a, b] : endpoints_) pairs.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
  }

  std::vector<EdgeSpec> edge_specs() const {
    std::vector<EdgeSpec> out;
    out.reserve(edge_ids_.size());
    for (EdgeIndex e = 0; e < edge_ids_.size(); ++e) {
      out.push_back({edge_ids_[e], vertex_ids_[endpoints_[e].first],
                     vertex_ids_[endpoints_[e].second]});
    }
    return out;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  static std::optional<std::size_t> find_sorted(
      const std::vector<std::string>& ids, std::string_view id) noexcept {
    auto it = std::lower_bound(ids.begin(), ids.end(), id,
                               [](const std::string& a, std::string_view b) {
                                 return std::string_view(a) < b;
                               });
    if (it == ids.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - ids.begin());
  }

  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<std::pair<VertexIndex, VertexIndex>> endpoints_;
  std::vector<std::vector<EdgeIndex>> incidence_;
};

// ---------------------------------------------------------------------------
// Signed graphs and marked graphs
// ---------------------------------------------------------------------------

struct SignedEdge {
  std::string id;
  std::string u;
  std::string v;
  Sign sign = Sign::positive;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// A multigraph whose edges carry signs.
class SignedGraph : public Multigraph {
 public:
  SignedGraph() = default;

  SignedGraph(std::vector<std::string> vertices, std::vector<SignedEdge> edges)
      : Multigraph(std::move(vertices), specs_of(edges)) {
    std::sort(edges.begin(), edges.end(),
              [](const SignedEdge& a, const SignedEdge& b) { return a.id < b.id; });
    signs_.reserve(edges.size());
    for (const SignedEdge& e : edges) signs_.push_back(e.sign);
  }

  Sign sign(EdgeIndex e) const { return signs_.at(e); }
  Sign sign(std::string_view edge) const { return sign(edge_index(edge)); }

  std::span<const Sign> signs() const noexcept { return signs_; }

  std::vector<SignedEdge> edges() const {
    std::vector<SignedEdge> out;
    out.reserve(edge_count());
    for (EdgeIndex e = 0; e < edge_count(); ++e) {
      auto [a, b] = endpoints(e);
      out.push_back({edge_id(e), vertex_id(a), vertex_id(b), signs_[e]});
    }
    return out;
  }

  std::size_t count_incident(VertexIndex v, Sign s) const {
    auto inc = incident_edges(v);
    return static_cast<std::size_t>(std::count_if(
        inc.begin(), inc.end(), [&](EdgeIndex e) { return signs_[e] == s; }));
  }

  /// Subgraph on the same vertex set keeping the edges that satisfy `keep`.
  template <typename Predicate>
  SignedGraph spanning_subgraph(Predicate keep) const {
    std::vector<SignedEdge> kept;
    for (EdgeIndex e = 0; e < edge_count(); ++e) {
      if (keep(e)) {
        auto [a, b] = endpoints(e);
        kept.push_back({edge_id(e), vertex_id(a), vertex_id(b), signs_[e]});
      }
    }
    return SignedGraph(vertex_ids(), std::move(kept));
  }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  static std::vector<EdgeSpec> specs_of(const std::vector<SignedEdge>& edges) {
    std::vector<EdgeSpec> specs;
    specs.reserve(edges.size());
    for (const SignedEdge& e : edges) specs.push_back({e.id, e.u, e.v});
    return specs;
  }

  std::vector<Sign> signs_;
};

struct MarkedVertex {
  std::string id;
  Sign sign = Sign::positive;

  friend bool operator==(const MarkedVertex&, const MarkedVertex&) = default;
};

/// A multigraph whose vertices carry signs (a vertex-signed graph).
class MarkedGraph : public Multigraph {
 public:
  MarkedGraph() = default;

  MarkedGraph(std::vector<MarkedVertex> vertices, std::vector<EdgeSpec> edges)
      : Multigraph(ids_of(vertices), std::move(edges)) {
    std::sort(vertices.begin(), vertices.end(),
              [](const MarkedVertex& a, const MarkedVertex& b) { return a.id < b.id; });
    marks_.reserve(vertices.size());
    for (const MarkedVertex& v : vertices) marks_.push_back(v.sign);
  }

  Sign mark(VertexIndex v) const { return marks_.at(v); }
  Sign mark(std::string_view vertex) const { return mark(vertex_index(vertex)); }

  std::span<const Sign> marks() const noexcept { return marks_; }

  std::vector<MarkedVertex> vertices() const {
    std::vector<MarkedVertex> out;
    out.reserve(vertex_count());
    for (VertexIndex v = 0; v < vertex_count(); ++v) {
      out.push_back({vertex_id(v), marks_[v]});
    }
    return out;
  }

  friend bool operator==(const MarkedGraph&, const MarkedGraph&) = default;

 private:
  static std::vector<std::string> ids_of(const std::vector<MarkedVertex>& vs) {
    std::vector<std::string> ids;
    ids.reserve(vs.size());
    for (const MarkedVertex& v : vs) ids.push_back(v.id);
    return ids;
  }

  std::vector<Sign> marks_;
};

// ---------------------------------------------------------------------------
// Circles and walks
// ---------------------------------------------------------------------------

/// An elementary closed edge sequence.
///
/// `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % size()]`. Circles
/// produced by this library are in canonical form (see `canonical`).
struct Circle {
  std::vector<std::string> edges;
  std::vector<std::string> vertices;

  std::size_t size() const noexcept { return edges.size(); }

  bool contains_vertex(std::string_view v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }
  bool contains_edge(std::string_view e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
  }

  friend bool operator==(const Circle&, const Circle&) = default;
  friend auto operator<=>(const Circle&, const Circle&) = default;
};

/// Shorter circles first, then lexicographic on the canonical edge sequence.
inline bool shorter_circle(const Circle& a, const Circle& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Rotates so the least edge identifier comes first, then picks the
/// traversal direction whose second edge identifier is smaller. Digons,
/// whose two directions share the same edge order, are ordered by vertices.
inline Circle canonical(const Circle& c) {
  const std::size_t n = c.size();
  if (n == 0 || c.vertices.size() != n) return c;

  auto rotated = [n](const Circle& in, std::size_t start) {
    Circle out;
    out.edges.reserve(n);
    out.vertices.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.edges.push_back(in.edges[(start + i) % n]);
      out.vertices.push_back(in.vertices[(start + i) % n]);
    }
    return out;
  };

  // Reverse traversal: v0 -e[n-1]- v[n-1] -e[n-2]- ... -e0- v0.
  Circle reversed;
  reversed.edges.assign(c.edges.rbegin(), c.edges.rend());
  reversed.vertices.reserve(n);
  reversed.vertices.push_back(c.vertices[0]);
  for (std::size_t i = n - 1; i >= 1; --i) reversed.vertices.push_back(c.vertices[i]);

  auto least = [](const Circle& in) {
    return static_cast<std::size_t>(
        std::min_element(in.edges.begin(), in.edges.end()) - in.edges.begin());
  };
  Circle forward = rotated(c, least(c));
  Circle backward = rotated(reversed, least(reversed));
  return std::min(forward, backward);
}

/// True when `c` is an elementary circle of `g` (structural validation).
inline bool is_circle_of(const Multigraph& g, const Circle& c) {
  const std::size_t n = c.size();
  if (n < 2 || c.vertices.size() != n) return false;
  std::vector<EdgeIndex> edges;
  std::vector<VertexIndex> vertices;
  for (std::size_t i = 0; i < n; ++i) {
    auto e = g.find_edge(c.edges[i]);
    auto v = g.find_vertex(c.vertices[i]);
    if (!e || !v) return false;
    edges.push_back(*e);
    vertices.push_back(*v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto [a, b] = g.endpoints(edges[i]);
    VertexIndex from = vertices[i];
    VertexIndex to = vertices[(i + 1) % n];
    if (!((a == from && b == to) || (a == to && b == from))) return false;
  }
  std::sort(edges.begin(), edges.end());
  std::sort(vertices.begin(), vertices.end());
  return std::adjacent_find(edges.begin(), edges.end()) == edges.end() &&
         std::adjacent_find(vertices.begin(), vertices.end()) == vertices.end();
}

/// An edge sequence in which consecutive edges share an endpoint.
struct Walk {
  std::vector<std::string> edges;
  bool closed = false;

  friend bool operator==(const Walk&, const Walk&) = default;
};

inline Walk as_walk(const Circle& c) { return Walk{c.edges, true}; }

/// Concatenation; the result is open.
inline Walk concatenate(const Walk& a, const Walk& b) {
  Walk out{a.edges, false};
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

namespace detail {

// Checks that the edge sequence admits a vertex traversal; with parallel
// edges the traversal may be ambiguous, so every (start, current) pair is
// tracked. There are at most two live states at any point.
inline void validate_walk(const Multigraph& g, const Walk& w) {
  std::vector<EdgeIndex> edges;
  edges.reserve(w.edges.size());
  for (const std::string& id : w.edges) {
    auto e = g.find_edge(id);
    if (!e) {
      throw GraphError(GraphError::Kind::unknown_edge, id,
                       "walk uses unknown edge '" + id + "'");
    }
    edges.push_back(*e);
  }
  if (edges.empty()) return;

  using State = std::pair<VertexIndex, VertexIndex>;  // (start, current)
  auto [a0, b0] = g.endpoints(edges.front());
  std::vector<State> states{{a0, b0}, {b0, a0}};
  for (std::size_t i = 1; i < edges.size(); ++i) {
    std::vector<State> next;
    for (auto [start, current] : states) {
      if (g.is_incident(edges[i], current)) {
        State s{start, g.other_endpoint(edges[i], current)};
        if (std::find(next.begin(), next.end(), s) == next.end()) next.push_back(s);
      }
    }
    if (next.empty()) {
      throw GraphError(GraphError::Kind::not_a_walk, w.edges[i],
                       "edge '" + w.edges[i] +
                           "' is not incident with the preceding edge of the walk");
    }
    states = std::move(next);
  }
  if (w.closed && std::none_of(states.begin(), states.end(), [](const State& s) {
        return s.first == s.second;
      })) {
    throw GraphError(GraphError::Kind::not_a_walk, w.edges.back(),
                     "walk is flagged closed but does not return to its start");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Free-function accessors
// ---------------------------------------------------------------------------

inline SignedGraph new_signed_graph(std::vector<std::string> vertices,
                                    std::vector<SignedEdge> edges) {
  return SignedGraph(std::move(vertices), std::move(edges));
}

inline std::size_t degree(const Multigraph& g, std::string_view v) {
  return g.degree(g.vertex_index(v));
}

inline bool is_totally_positive(const SignedGraph& g, std::string_view v) {
  return g.count_incident(g.vertex_index(v), Sign::negative) == 0;
}

inline bool is_totally_negative(const SignedGraph& g, std::string_view v) {
  return g.count_incident(g.vertex_index(v), Sign::positive) == 0;
}

/// Spanning subgraph of the negative edges.
inline SignedGraph negative_subgraph(const SignedGraph& g) {
  return g.spanning_subgraph([&](EdgeIndex e) { return is_negative(g.sign(e)); });
}

/// Product of edge signs along `w`; the empty walk is positive.
inline Sign sign_of_walk(const SignedGraph& g, const Walk& w) {
  detail::validate_walk(g, w);
  Sign s = Sign::positive;
  for (const std::string& e : w.edges) s *= g.sign(e);
  return s;
}

/// Edge-sign product of a circle of `g`.
inline Sign sign_of_circle(const SignedGraph& g, const Circle& c) {
  if (!is_circle_of(g, c)) {
    throw GraphError(GraphError::Kind::not_a_circle, c.edges.empty() ? "" : c.edges.front(),
                     "sequence is not a circle of the signed graph");
  }
  Sign s = Sign::positive;
  for (const std::string& e : c.edges) s *= g.sign(e);
  return s;
}

/// Vertex-sign product of a circle of a marked graph.
inline Sign circle_vertex_sign(const MarkedGraph& m, const Circle& c) {
  if (!is_circle_of(m, c)) {
    throw GraphError(GraphError::Kind::not_a_circle, c.edges.empty() ? "" : c.edges.front(),
                     "sequence is not a circle of the marked graph");
  }
  Sign s = Sign::positive;
  for (const std::string& v : c.vertices) s *= m.mark(v);
  return s;
}

}  // namespace linecons
