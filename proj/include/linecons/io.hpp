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

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "analysis.hpp"
#include "core.hpp"
#include "generate.hpp"
#include "structure.hpp"

namespace linecons {

using Json = nlohmann::json;

/// Malformed or schema-violating input; `location()` names the offending
/// element, e.g. "edges[2].sign".
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string location, const std::string& message)
      : std::runtime_error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

namespace detail {

inline Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw FormatError("byte " + std::to_string(e.byte), "JSON parse error");
  }
}

inline const Json& require_member(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(where, std::string("missing key \"") + key + "\"");
  return *it;
}

// Identifiers are strings; integers are accepted and stringified.
inline std::string read_identifier(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  throw FormatError(where, "identifier must be a string or an integer");
}

inline Sign read_sign(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "+") return Sign::positive;
    if (s == "-") return Sign::negative;
  }
  throw FormatError(where, "sign must be \"+\" or \"-\"");
}

inline std::string sign_string(Sign s) { return std::string(1, sign_char(s)); }

inline const Json& require_array(const Json& doc, const char* key) {
  const Json& arr = require_member(doc, key, "");
  if (!arr.is_array()) throw FormatError(key, "must be an array");
  return arr;
}

struct EdgeRecord {
  std::string id;
  std::string u;
  std::string v;
  const Json* object;
};

// Reads the shared edge-list schema and checks endpoints, loops and
// duplicate identifiers with element locations.
inline std::vector<EdgeRecord> read_edges(const Json& doc,
                                          const std::set<std::string>& vertex_set) {
  const Json& edges = require_array(doc, "edges");
  std::vector<EdgeRecord> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    if (!e.is_object()) throw FormatError(where, "edge must be an object");
    EdgeRecord r{read_identifier(require_member(e, "id", where), where + ".id"),
                 read_identifier(require_member(e, "u", where), where + ".u"),
                 read_identifier(require_member(e, "v", where), where + ".v"), &e};
    if (!seen.insert(r.id).second) throw FormatError(where, "duplicate edge id '" + r.id + "'");
    if (r.u == r.v) throw FormatError(where, "loop edge '" + r.id + "' at vertex '" + r.u + "'");
    for (const std::string* end : {&r.u, &r.v}) {
      if (!vertex_set.count(*end)) {
        throw FormatError(where, "endpoint '" + *end + "' is not a listed vertex");
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Signed graphs
// ---------------------------------------------------------------------------

/// Reads {"vertices": [id...], "edges": [{"id","u","v","sign"}...]}.
inline SignedGraph read_signed_graph(std::string_view text) {
  const Json doc = detail::parse_document(text);
  if (!doc.is_object()) throw FormatError("", "top level must be an object");
  const Json& vs = detail::require_array(doc, "vertices");
  std::vector<std::string> vertices;
  std::set<std::string> vertex_set;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    vertices.push_back(detail::read_identifier(vs[i], where));
    if (!vertex_set.insert(vertices.back()).second) {
      throw FormatError(where, "duplicate vertex '" + vertices.back() + "'");
    }
  }
  std::vector<SignedEdge> edges;
  std::size_t i = 0;
  for (auto& r : detail::read_edges(doc, vertex_set)) {
    const std::string where = "edges[" + std::to_string(i++) + "]";
    Sign s = detail::read_sign(detail::require_member(*r.object, "sign", where), where + ".sign");
    edges.push_back({std::move(r.id), std::move(r.u), std::move(r.v), s});
  }
  return SignedGraph(std::move(vertices), std::move(edges));
}

inline Json to_json(const SignedGraph& g) {
  Json edges = Json::array();
  for (const SignedEdge& e : g.edges()) {
    edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"sign", detail::sign_string(e.sign)}});
  }
  return {{"vertices", g.vertex_ids()}, {"edges", std::move(edges)}};
}

/// Canonical JSON: keys sorted, vertices and edges ordered by identifier.
inline std::string write_signed_graph(const SignedGraph& g) { return to_json(g).dump(); }

// ---------------------------------------------------------------------------
// Marked graphs
// ---------------------------------------------------------------------------

/// Reads {"vertices": [{"id","sign"}...], "edges": [{"id","u","v"}...]}.
inline MarkedGraph read_marked_graph(std::string_view text) {
  const Json doc = detail::parse_document(text);
  if (!doc.is_object()) throw FormatError("", "top level must be an object");
  const Json& vs = detail::require_array(doc, "vertices");
  std::vector<MarkedVertex> vertices;
  std::set<std::string> vertex_set;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!vs[i].is_object()) throw FormatError(where, "marked vertex must be an object");
    MarkedVertex v{detail::read_identifier(detail::require_member(vs[i], "id", where), where + ".id"),
                   detail::read_sign(detail::require_member(vs[i], "sign", where), where + ".sign")};
    if (!vertex_set.insert(v.id).second) throw FormatError(where, "duplicate vertex '" + v.id + "'");
    vertices.push_back(std::move(v));
  }
  std::vector<EdgeSpec> edges;
  for (auto& r : detail::read_edges(doc, vertex_set)) {
    edges.push_back({std::move(r.id), std::move(r.u), std::move(r.v)});
  }
  return MarkedGraph(std::move(vertices), std::move(edges));
}

inline Json to_json(const MarkedGraph& m) {
  Json vertices = Json::array();
  for (const MarkedVertex& v : m.vertices()) {
    vertices.push_back({{"id", v.id}, {"sign", detail::sign_string(v.sign)}});
  }
  Json edges = Json::array();
  for (const EdgeSpec& e : m.edge_specs()) edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

inline std::string write_marked_graph(const MarkedGraph& m) { return to_json(m).dump(); }

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

inline Json to_json(const Circle& c) { return {{"edges", c.edges}, {"vertices", c.vertices}}; }

inline Json to_json(const Verdict& v) {
  Json j{{"line_consistent", v.line_consistent}};
  if (v.failed_clause) j["failed_clause"] = clause_name(*v.failed_clause);
  if (v.location) j["location"] = *v.location;
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

inline Json to_json(const ComponentReport& c) {
  Json j{{"kind", kind_name(c.kind)}, {"vertices", c.vertices}, {"edges", c.edges}};
  if (c.circle_is_block) j["circle_is_block"] = *c.circle_is_block;
  if (!c.extra_edges.empty()) {
    Json extras = Json::array();
    for (const ExtraEdges& x : c.extra_edges) {
      extras.push_back({{"vertex", x.vertex}, {"edges", x.edges}, {"ok", x.ok}});
    }
    j["extra_edges"] = std::move(extras);
  }
  if (c.path_shape) j["path_shape"] = shape_name(*c.path_shape);
  if (c.endpoints_at_most_divalent) j["endpoints_at_most_divalent"] = *c.endpoints_at_most_divalent;
  if (c.path_case) j["path_case"] = case_name(*c.path_case);
  if (c.consequences_hold) j["consequences_hold"] = *c.consequences_hold;
  Json violations = Json::array();
  for (Clause v : c.violations) violations.push_back(clause_name(v));
  j["violations"] = std::move(violations);
  return j;
}

inline Json to_json(const StructureReport& r) {
  Json components = Json::array();
  for (const ComponentReport& c : r.components) components.push_back(to_json(c));
  Json blocks = Json::array();
  for (const Block& b : r.nontrivial_blocks) {
    blocks.push_back({{"vertices", b.vertices}, {"edges", b.edges}});
  }
  return {{"balanced", r.balanced},
          {"components", std::move(components)},
          {"nontrivial_blocks", std::move(blocks)},
          {"line_consistent", r.line_consistent}};
}

// ---------------------------------------------------------------------------
// Recipes
// ---------------------------------------------------------------------------

inline Json to_json(const Recipe& r) {
  return {{"core_vertices", r.core_vertices},
          {"core_extra_edges", r.core_extra_edges},
          {"negative_circles", r.negative_circles},
          {"closed_paths", r.closed_paths},
          {"block_paths", r.block_paths},
          {"isthmus_paths", r.isthmus_paths},
          {"max_extra_edges_per_circle_vertex", r.max_extra_edges_per_circle_vertex},
          {"isolated_vertices", r.isolated_vertices},
          {"pendant_probability", r.pendant_probability},
          {"attach_to_core", r.attach_to_core}};
}

/// Reads a recipe; absent keys keep their defaults.
inline Recipe read_recipe(std::string_view text) {
  const Json doc = detail::parse_document(text);
  if (!doc.is_object()) throw FormatError("", "recipe must be an object");
  Recipe r;
  auto count = [&](const char* key, std::size_t& out) {
    if (auto it = doc.find(key); it != doc.end()) {
      if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long long>() >= 0)) {
        throw FormatError(key, "must be a nonnegative integer");
      }
      out = it->get<std::size_t>();
    }
  };
  auto counts = [&](const char* key, std::vector<std::size_t>& out) {
    if (auto it = doc.find(key); it != doc.end()) {
      if (!it->is_array()) throw FormatError(key, "must be an array of lengths");
      out.clear();
      for (std::size_t i = 0; i < it->size(); ++i) {
        const Json& x = (*it)[i];
        if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0)) {
          throw FormatError(std::string(key) + "[" + std::to_string(i) + "]",
                            "must be a nonnegative integer");
        }
        out.push_back(x.get<std::size_t>());
      }
    }
  };
  count("core_vertices", r.core_vertices);
  count("core_extra_edges", r.core_extra_edges);
  counts("negative_circles", r.negative_circles);
  counts("closed_paths", r.closed_paths);
  counts("block_paths", r.block_paths);
  counts("isthmus_paths", r.isthmus_paths);
  count("max_extra_edges_per_circle_vertex", r.max_extra_edges_per_circle_vertex);
  count("isolated_vertices", r.isolated_vertices);
  if (auto it = doc.find("pendant_probability"); it != doc.end()) {
    if (!it->is_number()) throw FormatError("pendant_probability", "must be a number");
    r.pendant_probability = it->get<double>();
  }
  if (auto it = doc.find("attach_to_core"); it != doc.end()) {
    if (!it->is_boolean()) throw FormatError("attach_to_core", "must be a boolean");
    r.attach_to_core = it->get<bool>();
  }
  return r;
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

/// Graphviz rendering: positive edges solid, negative edges dashed. With a
/// report, each negative circle or path component becomes a cluster and
/// edges of nontrivial blocks carry a "block N" comment.
inline std::string export_dot(const SignedGraph& g, const StructureReport* report = nullptr) {
  std::ostringstream out;
  out << "graph signed {\n";
  std::set<std::string> clustered;
  if (report) {
    std::size_t index = 0;
    for (const ComponentReport& c : report->components) {
      if (c.kind == ComponentKind::single_vertex) continue;
      out << "  subgraph " << detail::dot_quote("cluster_" + std::to_string(index++)) << " {\n"
          << "    label=" << detail::dot_quote(kind_name(c.kind)) << ";\n";
      for (const std::string& v : c.vertices) {
        out << "    " << detail::dot_quote(v) << ";\n";
        clustered.insert(v);
      }
      out << "  }\n";
    }
  }
  for (const std::string& v : g.vertex_ids()) {
    if (!clustered.count(v)) out << "  " << detail::dot_quote(v) << ";\n";
  }
  std::map<std::string, std::size_t> block_of;
  if (report) {
    for (std::size_t b = 0; b < report->nontrivial_blocks.size(); ++b) {
      for (const std::string& e : report->nontrivial_blocks[b].edges) block_of[e] = b;
    }
  }
  for (const SignedEdge& e : g.edges()) {
    out << "  " << detail::dot_quote(e.u) << " -- " << detail::dot_quote(e.v)
        << " [label=" << detail::dot_quote(e.id + " " + detail::sign_string(e.sign))
        << ", style=" << (is_negative(e.sign) ? "dashed" : "solid");
    if (auto it = block_of.find(e.id); it != block_of.end()) {
      out << ", comment=" << detail::dot_quote("block " + std::to_string(it->second));
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

/// Graphviz rendering of a vertex-signed graph: nodes labeled "id [sign]".
inline std::string export_dot(const MarkedGraph& m) {
  std::ostringstream out;
  out << "graph marked {\n";
  for (const MarkedVertex& v : m.vertices()) {
    out << "  " << detail::dot_quote(v.id)
        << " [label=" << detail::dot_quote(v.id + " [" + detail::sign_string(v.sign) + "]") << "];\n";
  }
  for (const EdgeSpec& e : m.edge_specs()) {
    out << "  " << detail::dot_quote(e.u) << " -- " << detail::dot_quote(e.v)
        << " [label=" << detail::dot_quote(e.id) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace linecons
