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
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace linecons {

namespace detail {

// Identifiers padded to a common width so lexicographic order matches
// numeric order.
inline std::string padded_id(char prefix, std::size_t index, std::size_t count) {
  std::string digits = std::to_string(index);
  std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  return std::string(1, prefix) + std::string(width - std::min(width, digits.size()), '0') +
         digits;
}

// Portable draws from the standard-specified mt19937_64 output sequence
// (distribution objects are implementation-defined).
inline std::size_t draw_below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

inline double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool draw_chance(std::mt19937_64& rng, double p) { return draw_unit(rng) < p; }

// Accumulates vertices and signed edges, then names them.
class GraphBuilder {
 public:
  std::size_t add_vertex() { return vertex_count_++; }

  void add_edge(std::size_t a, std::size_t b, Sign s) { edges_.push_back({a, b, s}); }

  SignedGraph build() const {
    std::vector<std::string> vertices;
    vertices.reserve(vertex_count_);
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      vertices.push_back(padded_id('v', v, vertex_count_));
    }
    std::vector<SignedEdge> edges;
    edges.reserve(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto& [a, b, s] = edges_[e];
      edges.push_back({padded_id('e', e, edges_.size()), vertices[a], vertices[b], s});
    }
    return SignedGraph(std::move(vertices), std::move(edges));
  }

 private:
  struct Edge {
    std::size_t a;
    std::size_t b;
    Sign sign;
  };
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace detail

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Exhaustive enumeration
// ---------------------------------------------------------------------------

/// Every loopless multigraph on vertices v0..v(n-1), for n = 1..max_vertices,
/// with at most `max_edges` edges and edge multiplicity at most 2, under every
/// sign assignment. Parallel edges are interchangeable, so a doubled pair has
/// three signings (++, +-, --). Graphs are labeled, not reduced up to
/// isomorphism. Iteration order is deterministic.
class ExhaustiveGraphs {
 public:
  static constexpr std::size_t max_supported_vertices = 7;

  ExhaustiveGraphs(std::size_t max_vertices, std::size_t max_edges)
      : max_vertices_(max_vertices), max_edges_(max_edges) {
    if (max_vertices < 1 || max_vertices > max_supported_vertices) {
      throw GeneratorError("exhaustive generation supports 1 to 7 vertices");
    }
    reset_for(1);
  }

  /// The next graph, or nullopt when exhausted.
  std::optional<SignedGraph> next() {
    if (done_) return std::nullopt;
    SignedGraph g = current();
    advance();
    return g;
  }

 private:
  void reset_for(std::size_t n) {
    n_ = n;
    pairs_.clear();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) pairs_.emplace_back(a, b);
    }
    multiplicity_.assign(pairs_.size(), 0);
    choice_.assign(pairs_.size(), 0);
  }

  SignedGraph current() const {
    detail::GraphBuilder b;
    for (std::size_t v = 0; v < n_; ++v) b.add_vertex();
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      auto [x, y] = pairs_[p];
      if (multiplicity_[p] == 1) {
        b.add_edge(x, y, choice_[p] == 0 ? Sign::positive : Sign::negative);
      } else if (multiplicity_[p] == 2) {
        b.add_edge(x, y, choice_[p] == 2 ? Sign::negative : Sign::positive);
        b.add_edge(x, y, choice_[p] == 0 ? Sign::positive : Sign::negative);
      }
    }
    return b.build();
  }

  bool advance_choice() {
    for (std::size_t p = 0; p < choice_.size(); ++p) {
      if (++choice_[p] <= multiplicity_[p]) return true;
      choice_[p] = 0;
    }
    return false;
  }

  bool advance_multiplicity() {
    while (true) {
      std::size_t p = 0;
      while (p < multiplicity_.size() && ++multiplicity_[p] == 3) multiplicity_[p++] = 0;
      if (p == multiplicity_.size()) return false;
      std::size_t total = 0;
      for (std::size_t m : multiplicity_) total += m;
      if (total <= max_edges_) return true;
    }
  }

  void advance() {
    if (advance_choice()) return;
    choice_.assign(pairs_.size(), 0);
    if (advance_multiplicity()) return;
    if (n_ == max_vertices_) {
      done_ = true;
      return;
    }
    reset_for(n_ + 1);
  }

  std::size_t max_vertices_;
  std::size_t max_edges_;
  std::size_t n_ = 1;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> multiplicity_;
  std::vector<std::size_t> choice_;  // number of negative edges of the pair
  bool done_ = false;
};

inline ExhaustiveGraphs exhaustive_signed_graphs(std::size_t max_vertices, std::size_t max_edges) {
  return ExhaustiveGraphs(max_vertices, max_edges);
}

// ---------------------------------------------------------------------------
// Random graphs
// ---------------------------------------------------------------------------

/// `m` edges between uniformly chosen distinct vertices (parallel edges
/// allowed), each negative with probability `negative_probability`.
inline SignedGraph random_signed_graph(std::size_t n, std::size_t m, double negative_probability,
                                       std::uint64_t seed) {
  if (m > 0 && n < 2) throw GeneratorError("edges need at least two vertices");
  if (!(negative_probability >= 0.0 && negative_probability <= 1.0)) {
    throw GeneratorError("negative probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  detail::GraphBuilder b;
  for (std::size_t v = 0; v < n; ++v) b.add_vertex();
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t x = detail::draw_below(rng, n);
    std::size_t y = detail::draw_below(rng, n - 1);
    if (y >= x) ++y;
    b.add_edge(x, y, detail::draw_chance(rng, negative_probability) ? Sign::negative
                                                                    : Sign::positive);
  }
  return b.build();
}

struct RandomGraphParams {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  double negative_probability = 0.0;
  std::uint64_t seed = 0;
};

/// Parameters of the `index`-th graph of a seeded random corpus: vertex
/// count in [1, max_vertices], edge count in [0, max_edges], and a negative
/// probability from a fixed ladder. Independent of evaluation order.
inline RandomGraphParams random_corpus_params(std::uint64_t seed, std::uint64_t index,
                                              std::size_t max_vertices, std::size_t max_edges) {
  static constexpr std::array<double, 6> ladder{0.0, 0.1, 0.25, 0.5, 0.75, 1.0};
  if (max_vertices < 1) throw GeneratorError("corpus needs at least one vertex");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  RandomGraphParams p;
  p.vertices = 1 + detail::draw_below(rng, max_vertices);
  p.edges = p.vertices < 2 ? 0 : detail::draw_below(rng, max_edges + 1);
  p.negative_probability = ladder[detail::draw_below(rng, ladder.size())];
  p.seed = rng();
  return p;
}

inline SignedGraph random_corpus_graph(std::uint64_t seed, std::uint64_t index,
                                       std::size_t max_vertices, std::size_t max_edges) {
  RandomGraphParams p = random_corpus_params(seed, index, max_vertices, max_edges);
  return random_signed_graph(p.vertices, p.edges, p.negative_probability, p.seed);
}

// ---------------------------------------------------------------------------
// Line-consistent construction
// ---------------------------------------------------------------------------

/// Construction recipe for a line-consistent signed graph. Every negative
/// structure follows the admissible negative-component forms:
///
///  - `negative_circles`: all-negative circles of even length that are blocks;
///    each vertex gets at most `max_extra_edges_per_circle_vertex` (0 or 1)
///    further edge, a positive isthmus.
///  - `closed_paths`: negative paths of even length closed into a circle
///    block by one positive edge; divalent endpoints.
///  - `block_paths`: induced negative paths of even length whose endpoints
///    join the positive core by one positive edge each.
///  - `isthmus_paths`: negative paths of isthmi, extended at the endpoints by
///    positive isthmi only.
///
/// The positive core is a random connected graph on `core_vertices` vertices
/// with `core_extra_edges` edges beyond a spanning tree. Internal path
/// vertices and circle vertices receive positive pendant trees with
/// probability `pendant_probability`.
struct Recipe {
  std::size_t core_vertices = 0;
  std::size_t core_extra_edges = 0;
  std::vector<std::size_t> negative_circles;
  std::vector<std::size_t> closed_paths;
  std::vector<std::size_t> block_paths;
  std::vector<std::size_t> isthmus_paths;
  std::size_t max_extra_edges_per_circle_vertex = 1;
  std::size_t isolated_vertices = 0;
  double pendant_probability = 0.5;
  bool attach_to_core = true;

  friend bool operator==(const Recipe&, const Recipe&) = default;
};

inline void validate_recipe(const Recipe& r) {
  if (r.core_extra_edges > 0 && r.core_vertices < 2) {
    throw GeneratorError("core extra edges need at least two core vertices");
  }
  for (std::size_t k : r.negative_circles) {
    if (k < 2 || k % 2 != 0) {
      throw GeneratorError("an all-negative circle needs even length >= 2 to stay balanced");
    }
  }
  for (std::size_t k : r.closed_paths) {
    if (k < 2 || k % 2 != 0) {
      throw GeneratorError("a closed negative path needs even length >= 2 to stay balanced");
    }
  }
  for (std::size_t k : r.block_paths) {
    if (k < 2 || k % 2 != 0) {
      throw GeneratorError("a block negative path needs even length >= 2 to stay balanced");
    }
  }
  if (!r.block_paths.empty() && r.core_vertices == 0) {
    throw GeneratorError("block negative paths need a nonempty positive core");
  }
  for (std::size_t k : r.isthmus_paths) {
    if (k < 1) throw GeneratorError("a negative isthmus path needs length at least 1");
  }
  if (r.max_extra_edges_per_circle_vertex > 1) {
    throw GeneratorError("a negative-circle vertex admits at most one extra edge");
  }
  if (!(r.pendant_probability >= 0.0 && r.pendant_probability <= 1.0)) {
    throw GeneratorError("pendant probability must lie in [0, 1]");
  }
}

inline SignedGraph generate_line_consistent(const Recipe& recipe, std::uint64_t seed) {
  validate_recipe(recipe);
  std::mt19937_64 rng(seed);
  detail::GraphBuilder b;
  const Sign pos = Sign::positive;
  const Sign neg = Sign::negative;

  std::vector<std::size_t> core;
  for (std::size_t i = 0; i < recipe.core_vertices; ++i) {
    core.push_back(b.add_vertex());
    if (i > 0) b.add_edge(core[i], core[detail::draw_below(rng, i)], pos);
  }
  for (std::size_t i = 0; i < recipe.core_extra_edges; ++i) {
    std::size_t x = detail::draw_below(rng, core.size());
    std::size_t y = detail::draw_below(rng, core.size() - 1);
    if (y >= x) ++y;
    b.add_edge(core[x], core[y], pos);
  }
  // Attachments go to a random least-loaded core vertex, which keeps core
  // degrees (and so line-graph cliques) small.
  std::vector<std::size_t> load(core.size(), 0);
  auto random_core = [&] {
    std::size_t least = *std::min_element(load.begin(), load.end());
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < core.size(); ++i) {
      if (load[i] == least) candidates.push_back(i);
    }
    std::size_t pick = candidates[detail::draw_below(rng, candidates.size())];
    ++load[pick];
    return core[pick];
  };
  const bool can_attach = recipe.attach_to_core && !core.empty();

  // A positive pendant tree hanging from `v` by a positive isthmus.
  auto hang_tree = [&](std::size_t v) {
    std::size_t leaf = b.add_vertex();
    b.add_edge(v, leaf, pos);
    while (detail::draw_chance(rng, recipe.pendant_probability / 2)) {
      std::size_t next = b.add_vertex();
      b.add_edge(leaf, next, pos);
      leaf = next;
    }
  };
  auto maybe_hang_tree = [&](std::size_t v) {
    if (detail::draw_chance(rng, recipe.pendant_probability)) hang_tree(v);
  };
  auto negative_path = [&](std::size_t length) {
    std::vector<std::size_t> path{b.add_vertex()};
    for (std::size_t i = 0; i < length; ++i) {
      path.push_back(b.add_vertex());
      b.add_edge(path[i], path[i + 1], neg);
    }
    return path;
  };

  for (std::size_t k : recipe.negative_circles) {
    std::vector<std::size_t> circle = negative_path(k - 1);
    b.add_edge(circle.back(), circle.front(), neg);
    if (recipe.max_extra_edges_per_circle_vertex == 0) continue;
    for (std::size_t i = 0; i < circle.size(); ++i) {
      if (i == 0 && can_attach) {
        b.add_edge(circle[i], random_core(), pos);
      } else {
        maybe_hang_tree(circle[i]);
      }
    }
  }

  for (std::size_t k : recipe.closed_paths) {
    std::vector<std::size_t> path = negative_path(k);
    b.add_edge(path.back(), path.front(), pos);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (i == 1 && can_attach) {
        b.add_edge(path[i], random_core(), pos);
      } else {
        maybe_hang_tree(path[i]);
      }
    }
  }

  for (std::size_t k : recipe.block_paths) {
    std::vector<std::size_t> path = negative_path(k);
    b.add_edge(path.front(), random_core(), pos);
    b.add_edge(path.back(), random_core(), pos);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) maybe_hang_tree(path[i]);
  }

  for (std::size_t k : recipe.isthmus_paths) {
    std::vector<std::size_t> path = negative_path(k);
    if (can_attach) {
      b.add_edge(path.front(), random_core(), pos);
    } else {
      maybe_hang_tree(path.front());
    }
    maybe_hang_tree(path.back());
    for (std::size_t i = 1; i + 1 < path.size(); ++i) maybe_hang_tree(path[i]);
  }

  for (std::size_t i = 0; i < recipe.isolated_vertices; ++i) b.add_vertex();
  return b.build();
}

/// A random valid recipe of modest size, for corpus generation.
inline Recipe random_recipe(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto below = [&](std::size_t n) { return detail::draw_below(rng, n); };
  Recipe r;
  r.core_vertices = below(6);
  r.core_extra_edges = r.core_vertices >= 3 ? below(3) : 0;
  for (std::size_t i = below(3); i > 0; --i) r.negative_circles.push_back(2 + 2 * below(3));
  for (std::size_t i = below(2); i > 0; --i) r.closed_paths.push_back(2 + 2 * below(2));
  if (r.core_vertices > 0) {
    for (std::size_t i = below(3); i > 0; --i) r.block_paths.push_back(2 + 2 * below(2));
  }
  for (std::size_t i = below(3); i > 0; --i) r.isthmus_paths.push_back(1 + below(3));
  r.max_extra_edges_per_circle_vertex = below(2);
  r.isolated_vertices = below(2);
  static constexpr std::array<double, 3> pendants{0.0, 0.3, 0.6};
  r.pendant_probability = pendants[below(pendants.size())];
  r.attach_to_core = below(2) == 1;
  return r;
}

}  // namespace linecons
