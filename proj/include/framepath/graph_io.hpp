// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// Graph documents and the textual literals used on the command line.
//
// A graph document is one JSON object:
//   { "vertices": ["v1", ...],
//     "edges":    [{"name": "e", "r": "v1", "d": "v2"}, ...],
//     "bundles":  [{"name": "B", "r": "v", "d": "v"}, ...] }
//
// Path literals: a bare vertex name, or edge names joined with '.', bundle
// members written name[index].  Lassos are "prefix;cycle".  Basic opens are
// "(path,{edge,edge})".

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "framepath/basic_open.hpp"
#include "framepath/errors.hpp"
#include "framepath/graph.hpp"

namespace framepath {

inline Graph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("graph document must be an object");
  Graph g;
  try {
    if (doc.contains("vertices"))
      for (const auto& v : doc.at("vertices"))
        g.add_vertex(v.get<std::string>());
    if (doc.contains("edges"))
      for (const auto& e : doc.at("edges"))
        g.add_edge(e.at("name").get<std::string>(),
                   e.at("r").get<std::string>(),
                   e.at("d").get<std::string>());
    if (doc.contains("bundles"))
      for (const auto& b : doc.at("bundles"))
        g.add_bundle(b.at("name").get<std::string>(),
                     b.at("r").get<std::string>(),
                     b.at("d").get<std::string>());
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("malformed graph document: ") + err.what());
  } catch (const DomainError& err) {
    // Duplicate or reserved names make the document itself invalid.
    throw ParseError(std::string("invalid graph document: ") + err.what());
  }
  return g;
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    // Report the position as line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < err.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("parse error in " + path + " at line " +
                     std::to_string(line) + ", column " + std::to_string(col));
  }
  return graph_from_json(doc);
}

// ---------------------------------------------------------------------------
// literals

inline EdgeRef parse_edge_ref(const Graph& g, const std::string& token) {
  const auto bracket = token.find('[');
  if (bracket == std::string::npos) {
    if (auto id = g.find_edge(token)) return EdgeRef{*id, 0, false};
    throw ParseError("unknown edge: " + token);
  }
  if (token.back() != ']') throw ParseError("malformed bundle member: " + token);
  const std::string name = token.substr(0, bracket);
  const std::string idx = token.substr(bracket + 1, token.size() - bracket - 2);
  auto id = g.find_bundle(name);
  if (!id) throw ParseError("unknown bundle: " + name);
  try {
    const unsigned long i = std::stoul(idx);
    return EdgeRef{*id, static_cast<std::uint32_t>(i), true};
  } catch (const std::exception&) {
    throw ParseError("malformed bundle index in: " + token);
  }
}

inline Path parse_path(const Graph& g, const std::string& text) {
  if (text.empty()) throw ParseError("empty path literal");
  if (text.find('.') == std::string::npos && g.has_vertex(text))
    return Path::vertex(g, g.vertex_id(text));
  std::vector<EdgeRef> edges;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, '.')) {
    if (token.empty()) throw ParseError("empty edge name in path: " + text);
    edges.push_back(parse_edge_ref(g, token));
  }
  if (edges.empty()) throw ParseError("empty path literal");
  const VertexId range = g.range_of(edges.front());
  try {
    return Path::make(g, range, std::move(edges));
  } catch (const DomainError& err) {
    throw ParseError(std::string("path does not compose: ") + err.what());
  }
}

inline PathPoint parse_point(const Graph& g, const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) return PathPoint{parse_path(g, text)};
  const Path prefix = parse_path(g, text.substr(0, semi));
  const Path cycle = parse_path(g, text.substr(semi + 1));
  try {
    return PathPoint{LassoPath::make(g, prefix, cycle)};
  } catch (const DomainError& err) {
    throw ParseError(std::string("lasso does not compose: ") + err.what());
  }
}

// "(path,{e,f})" or "{}" for the empty element
inline BasicOpen parse_basic(const Graph& g, const std::string& text) {
  if (text == "{}") return BasicOpen::empty();
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError("basic open must look like (path,{edges}): " + text);
  const std::string inner = text.substr(1, text.size() - 2);
  const auto brace = inner.find(",{");
  if (brace == std::string::npos || inner.back() != '}')
    throw ParseError("basic open must look like (path,{edges}): " + text);
  const Path mu = parse_path(g, inner.substr(0, brace));
  const std::string edge_list =
      inner.substr(brace + 2, inner.size() - brace - 3);
  std::vector<EdgeRef> excluded;
  if (!edge_list.empty()) {
    std::stringstream ss(edge_list);
    std::string token;
    while (std::getline(ss, token, ','))
      excluded.push_back(parse_edge_ref(g, token));
  }
  try {
    return BasicOpen::make(g, mu, std::move(excluded));
  } catch (const DomainError& err) {
    throw ParseError(std::string("invalid basic open: ") + err.what());
  }
}

}  // namespace framepath
