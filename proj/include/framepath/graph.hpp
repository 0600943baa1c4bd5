// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// Directed graphs with countably infinite edge bundles, finite paths, and
// eventually periodic infinite paths (lassos).  Edges compose the range-first
// way: a path mu_1...mu_n requires d(mu_i) = r(mu_{i+1}), and mu may be
// extended on the right by any edge e with r(e) = d(mu).

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "framepath/errors.hpp"

namespace framepath {

using VertexId = std::uint32_t;

// A plain edge or one member of a countably infinite bundle.
struct EdgeRef {
  std::uint32_t id = 0;     // edge id, or bundle id
  std::uint32_t index = 0;  // member index within the bundle
  bool is_bundle = false;

  friend bool operator==(const EdgeRef& a, const EdgeRef& b) {
    return a.id == b.id && a.is_bundle == b.is_bundle &&
           (!a.is_bundle || a.index == b.index);
  }
  friend bool operator!=(const EdgeRef& a, const EdgeRef& b) { return !(a == b); }
};

class Graph {
 public:
  struct Edge {
    std::string name;
    VertexId r, d;
  };
  struct Bundle {
    std::string name;
    VertexId r, d;
  };

  VertexId add_vertex(const std::string& name) {
    claim_name(name);
    vertices_.push_back(name);
    vertex_ids_.emplace(name, static_cast<VertexId>(vertices_.size() - 1));
    plain_into_.emplace_back();
    bundles_into_.emplace_back();
    return static_cast<VertexId>(vertices_.size() - 1);
  }

  std::uint32_t add_edge(const std::string& name, const std::string& r,
                         const std::string& d) {
    claim_name(name);
    Edge e{name, vertex_id(r), vertex_id(d)};
    edges_.push_back(e);
    const auto id = static_cast<std::uint32_t>(edges_.size() - 1);
    edge_ids_.emplace(name, id);
    plain_into_[e.r].push_back(id);
    return id;
  }

  std::uint32_t add_bundle(const std::string& name, const std::string& r,
                           const std::string& d) {
    claim_name(name);
    Bundle b{name, vertex_id(r), vertex_id(d)};
    bundles_.push_back(b);
    const auto id = static_cast<std::uint32_t>(bundles_.size() - 1);
    bundle_ids_.emplace(name, id);
    bundles_into_[b.r].push_back(id);
    return id;
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t bundle_count() const { return bundles_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(std::uint32_t id) const { return edges_.at(id); }
  const Bundle& bundle(std::uint32_t id) const { return bundles_.at(id); }

  VertexId vertex_id(const std::string& name) const {
    auto it = vertex_ids_.find(name);
    if (it == vertex_ids_.end()) throw DomainError("unknown vertex: " + name);
    return it->second;
  }
  std::optional<std::uint32_t> find_edge(const std::string& name) const {
    auto it = edge_ids_.find(name);
    if (it == edge_ids_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::uint32_t> find_bundle(const std::string& name) const {
    auto it = bundle_ids_.find(name);
    if (it == bundle_ids_.end()) return std::nullopt;
    return it->second;
  }
  bool has_vertex(const std::string& name) const {
    return vertex_ids_.count(name) > 0;
  }

  VertexId range_of(const EdgeRef& e) const {
    return e.is_bundle ? bundles_.at(e.id).r : edges_.at(e.id).r;
  }
  VertexId domain_of(const EdgeRef& e) const {
    return e.is_bundle ? bundles_.at(e.id).d : edges_.at(e.id).d;
  }
  const std::string& base_name(const EdgeRef& e) const {
    return e.is_bundle ? bundles_.at(e.id).name : edges_.at(e.id).name;
  }
  std::string ref_name(const EdgeRef& e) const {
    if (!e.is_bundle) return edges_.at(e.id).name;
    return bundles_.at(e.id).name + "[" + std::to_string(e.index) + "]";
  }

  // Canonical order on edge references: (base name, bundle index).
  bool ref_less(const EdgeRef& a, const EdgeRef& b) const {
    const std::string& na = base_name(a);
    const std::string& nb = base_name(b);
    if (na != nb) return na < nb;
    return (a.is_bundle ? a.index : 0) < (b.is_bundle ? b.index : 0);
  }

  // Plain edges with range v, in insertion order.
  const std::vector<std::uint32_t>& plain_into(VertexId v) const {
    return plain_into_.at(v);
  }
  // Bundles with range v.
  const std::vector<std::uint32_t>& bundles_into(VertexId v) const {
    return bundles_into_.at(v);
  }

  // Receivers r^{-1}(v), with bundle members enumerated up to `bundle_cap`.
  std::vector<EdgeRef> receivers(VertexId v, std::uint32_t bundle_cap) const {
    std::vector<EdgeRef> out;
    for (auto id : plain_into_.at(v)) out.push_back(EdgeRef{id, 0, false});
    for (auto id : bundles_into_.at(v))
      for (std::uint32_t i = 0; i < bundle_cap; ++i)
        out.push_back(EdgeRef{id, i, true});
    std::sort(out.begin(), out.end(),
              [&](const EdgeRef& a, const EdgeRef& b) { return ref_less(a, b); });
    return out;
  }

 private:
  void claim_name(const std::string& name) {
    if (name.empty()) throw DomainError("empty name");
    // Names feed the textual path literals, so the delimiters are reserved.
    if (name.find_first_of(".;,[](){}| \t\n") != std::string::npos)
      throw DomainError("name contains a reserved character: " + name);
    if (vertex_ids_.count(name) || edge_ids_.count(name) ||
        bundle_ids_.count(name))
      throw DomainError("duplicate name: " + name);
  }

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Bundle> bundles_;
  std::unordered_map<std::string, VertexId> vertex_ids_;
  std::unordered_map<std::string, std::uint32_t> edge_ids_;
  std::unordered_map<std::string, std::uint32_t> bundle_ids_;
  std::vector<std::vector<std::uint32_t>> plain_into_;
  std::vector<std::vector<std::uint32_t>> bundles_into_;
};

// vertex classification per the discrete-graph reading of r^{-1}
enum class VertexClass { kSource, kInfiniteReceiver, kRegular };

inline VertexClass classify_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw DomainError("unknown vertex id");
  if (!g.bundles_into(v).empty()) return VertexClass::kInfiniteReceiver;
  if (g.plain_into(v).empty()) return VertexClass::kSource;
  return VertexClass::kRegular;
}

inline bool is_singular(VertexClass c) { return c != VertexClass::kRegular; }

inline const char* vertex_class_name(VertexClass c) {
  switch (c) {
    case VertexClass::kSource: return "source";
    case VertexClass::kInfiniteReceiver: return "infinite-receiver";
    default: return "regular";
  }
}

// A finite path; length 0 is a bare vertex.
class Path {
 public:
  static Path vertex(const Graph& g, VertexId v) {
    if (v >= g.vertex_count()) throw DomainError("unknown vertex id");
    Path p;
    p.range_ = v;
    return p;
  }

  static Path make(const Graph& g, VertexId range, std::vector<EdgeRef> edges) {
    Path p;
    p.range_ = range;
    p.edges_ = std::move(edges);
    VertexId at = range;
    for (const auto& e : p.edges_) {
      if (g.range_of(e) != at)
        throw DomainError("path not composable at " + g.ref_name(e));
      at = g.domain_of(e);
    }
    return p;
  }

  std::size_t length() const { return edges_.size(); }
  VertexId range() const { return range_; }
  VertexId domain(const Graph& g) const {
    return edges_.empty() ? range_ : g.domain_of(edges_.back());
  }
  const std::vector<EdgeRef>& edges() const { return edges_; }
  const EdgeRef& edge(std::size_t i) const { return edges_.at(i); }

  Path extended(const Graph& g, const EdgeRef& e) const {
    if (g.range_of(e) != domain(g))
      throw DomainError("cannot extend: r(" + g.ref_name(e) +
                        ") is not the path domain");
    Path p = *this;
    p.edges_.push_back(e);
    return p;
  }

  Path prefix(std::size_t k) const {
    if (k > length()) throw DomainError("prefix longer than path");
    Path p;
    p.range_ = range_;
    p.edges_.assign(edges_.begin(), edges_.begin() + static_cast<long>(k));
    return p;
  }

  bool is_prefix_of(const Path& other) const {
    if (length() > other.length() || range_ != other.range_) return false;
    for (std::size_t i = 0; i < length(); ++i)
      if (!(edges_[i] == other.edges_[i])) return false;
    return true;
  }

  friend bool operator==(const Path& a, const Path& b) {
    return a.range_ == b.range_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }

 private:
  VertexId range_ = 0;
  std::vector<EdgeRef> edges_;
};

inline std::string render(const Graph& g, const Path& p) {
  if (p.length() == 0) return g.vertex_name(p.range());
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ".";
    out += g.ref_name(p.edge(i));
  }
  return out;
}

// Order: by length, then range name, then edge-wise (base name, index).
inline bool path_less(const Graph& g, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.range() != b.range())
    return g.vertex_name(a.range()) < g.vertex_name(b.range());
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (!(a.edge(i) == b.edge(i))) return g.ref_less(a.edge(i), b.edge(i));
  }
  return false;
}

// prefix followed by the cycle repeated forever
class LassoPath {
 public:
  static LassoPath make(const Graph& g, Path prefix, Path cycle) {
    if (cycle.length() == 0) throw DomainError("lasso cycle must be nonempty");
    if (cycle.range() != cycle.domain(g))
      throw DomainError("lasso cycle must return to its range vertex");
    if (prefix.domain(g) != cycle.range())
      throw DomainError("lasso prefix does not meet its cycle");
    LassoPath l;
    l.prefix_ = std::move(prefix);
    l.cycle_ = std::move(cycle);
    return l;
  }

  const Path& prefix() const { return prefix_; }
  const Path& cycle() const { return cycle_; }
  std::size_t description_length() const {
    return prefix_.length() + cycle_.length();
  }
  VertexId range() const {
    return prefix_.length() ? prefix_.range() : cycle_.range();
  }

  const EdgeRef& edge_at(std::size_t i) const {
    if (i < prefix_.length()) return prefix_.edge(i);
    return cycle_.edge((i - prefix_.length()) % cycle_.length());
  }

  // Unique representative: primitive cycle, and no prefix tail that merely
  // repeats the cycle's last edge.
  LassoPath canonical(const Graph& g) const {
    std::vector<EdgeRef> cyc(cycle_.edges());
    for (std::size_t p = 1; p <= cyc.size() / 2; ++p) {
      if (cyc.size() % p) continue;
      bool periodic = true;
      for (std::size_t i = p; i < cyc.size() && periodic; ++i)
        periodic = cyc[i] == cyc[i % p];
      if (periodic) {
        cyc.resize(p);
        break;
      }
    }
    std::vector<EdgeRef> pre(prefix_.edges());
    VertexId pre_range = prefix_.length() ? prefix_.range() : cycle_.range();
    while (!pre.empty() && pre.back() == cyc.back()) {
      pre.pop_back();
      std::rotate(cyc.rbegin(), cyc.rbegin() + 1, cyc.rend());
    }
    VertexId cyc_range = g.range_of(cyc.front());
    Path new_pre = pre.empty() ? Path::vertex(g, cyc_range)
                               : Path::make(g, pre_range, std::move(pre));
    Path new_cyc = Path::make(g, cyc_range, std::move(cyc));
    return LassoPath::make(g, std::move(new_pre), std::move(new_cyc));
  }

 private:
  Path prefix_;
  Path cycle_;
};

inline std::string render(const Graph& g, const LassoPath& l) {
  return render(g, l.prefix()) + ";" + render(g, l.cycle());
}

// A point of the path space: a finite path or an eventually periodic
// infinite one.
class PathPoint {
 public:
  PathPoint(Path p) : rep_(std::move(p)) {}          // NOLINT(runtime/explicit)
  PathPoint(LassoPath l) : rep_(std::move(l)) {}     // NOLINT(runtime/explicit)

  bool infinite() const { return std::holds_alternative<LassoPath>(rep_); }
  const Path* as_path() const { return std::get_if<Path>(&rep_); }
  const LassoPath* as_lasso() const { return std::get_if<LassoPath>(&rep_); }

  std::optional<std::size_t> length() const {
    if (auto* p = as_path()) return p->length();
    return std::nullopt;
  }
  std::size_t description_length() const {
    if (auto* p = as_path()) return p->length();
    return as_lasso()->description_length();
  }
  VertexId range() const {
    if (auto* p = as_path()) return p->range();
    return as_lasso()->range();
  }
  const EdgeRef& edge_at(std::size_t i) const {
    if (auto* p = as_path()) return p->edge(i);
    return as_lasso()->edge_at(i);
  }

  Path prefix(const Graph& g, std::size_t k) const {
    if (auto* p = as_path()) return p->prefix(k);
    std::vector<EdgeRef> edges;
    edges.reserve(k);
    for (std::size_t i = 0; i < k; ++i) edges.push_back(edge_at(i));
    return Path::make(g, range(), std::move(edges));
  }

 private:
  std::variant<Path, LassoPath> rep_;
};

inline std::string render(const Graph& g, const PathPoint& x) {
  if (auto* p = x.as_path()) return render(g, *p);
  return render(g, *x.as_lasso());
}

inline bool point_equal(const Graph& g, const PathPoint& a, const PathPoint& b) {
  if (a.infinite() != b.infinite()) return false;
  if (auto* p = a.as_path()) return *p == *b.as_path();
  const LassoPath ca = a.as_lasso()->canonical(g);
  const LassoPath cb = b.as_lasso()->canonical(g);
  return ca.prefix() == cb.prefix() && ca.cycle() == cb.cycle();
}

// Finite points first, then by description length, then textual.
inline bool point_less(const Graph& g, const PathPoint& a, const PathPoint& b) {
  if (a.infinite() != b.infinite()) return b.infinite();
  if (!a.infinite()) return path_less(g, *a.as_path(), *b.as_path());
  const LassoPath ca = a.as_lasso()->canonical(g);
  const LassoPath cb = b.as_lasso()->canonical(g);
  if (ca.description_length() != cb.description_length())
    return ca.description_length() < cb.description_length();
  return render(g, ca) < render(g, cb);
}

// The shift map sigma_e: prepends e to any x with r(x) = d(e).
inline PathPoint sigma(const Graph& g, const EdgeRef& e, const PathPoint& x) {
  if (x.range() != g.domain_of(e))
    throw DomainError("sigma: r(x) is not d(" + g.ref_name(e) + ")");
  if (auto* p = x.as_path()) {
    std::vector<EdgeRef> edges;
    edges.reserve(p->length() + 1);
    edges.push_back(e);
    for (const auto& f : p->edges()) edges.push_back(f);
    return PathPoint(Path::make(g, g.range_of(e), std::move(edges)));
  }
  const auto* l = x.as_lasso();
  std::vector<EdgeRef> pre;
  pre.reserve(l->prefix().length() + 1);
  pre.push_back(e);
  for (const auto& f : l->prefix().edges()) pre.push_back(f);
  return PathPoint(LassoPath::make(
      g, Path::make(g, g.range_of(e), std::move(pre)), l->cycle()));
}

// Removes the leading edge, which must be e.
inline PathPoint sigma_inv(const Graph& g, const EdgeRef& e, const PathPoint& x) {
  if (auto* p = x.as_path()) {
    if (p->length() == 0 || !(p->edge(0) == e))
      throw DomainError("sigma_inv: x does not start with " + g.ref_name(e));
    std::vector<EdgeRef> edges(p->edges().begin() + 1, p->edges().end());
    return PathPoint(Path::make(g, g.domain_of(e), std::move(edges)));
  }
  const auto* l = x.as_lasso();
  if (!(l->edge_at(0) == e))
    throw DomainError("sigma_inv: x does not start with " + g.ref_name(e));
  if (l->prefix().length() > 0) {
    std::vector<EdgeRef> pre(l->prefix().edges().begin() + 1,
                             l->prefix().edges().end());
    return PathPoint(LassoPath::make(
        g, Path::make(g, g.domain_of(e), std::move(pre)), l->cycle()));
  }
  // x = cycle^infinity: drop the first cycle edge into the prefix slack.
  std::vector<EdgeRef> pre(l->cycle().edges().begin() + 1,
                           l->cycle().edges().end());
  return PathPoint(LassoPath::make(
      g, Path::make(g, g.domain_of(e), std::move(pre)), l->cycle()));
}

// All paths of length <= max_len, bundle members below `bundle_cap`, sorted.
inline std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_len,
                                         std::uint32_t bundle_cap) {
  std::vector<Path> all;
  std::vector<Path> frontier;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    frontier.push_back(Path::vertex(g, v));
  all = frontier;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (const auto& e : g.receivers(p.domain(g), bundle_cap))
        next.push_back(p.extended(g, e));
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  std::sort(all.begin(), all.end(),
            [&](const Path& a, const Path& b) { return path_less(g, a, b); });
  return all;
}

// Canonical lasso representatives with |prefix| + |cycle| <= max_desc.
inline std::vector<LassoPath> enumerate_lassos(const Graph& g,
                                               std::size_t max_desc,
                                               std::uint32_t bundle_cap) {
  if (max_desc == 0) return {};
  auto paths = enumerate_paths(g, max_desc, bundle_cap);
  // Bucket prefixes by their domain vertex once.
  std::vector<std::vector<const Path*>> by_domain(g.vertex_count());
  for (const auto& p : paths) by_domain[p.domain(g)].push_back(&p);
  std::vector<LassoPath> out;
  std::unordered_map<std::string, bool> seen;
  for (const auto& cyc : paths) {
    if (cyc.length() == 0 || cyc.range() != cyc.domain(g)) continue;
    for (const Path* pre : by_domain[cyc.range()]) {
      if (pre->length() + cyc.length() > max_desc) continue;
      LassoPath l = LassoPath::make(g, *pre, cyc).canonical(g);
      std::string key = render(g, l);
      if (seen.emplace(std::move(key), true).second) out.push_back(std::move(l));
    }
  }
  std::sort(out.begin(), out.end(), [&](const LassoPath& a, const LassoPath& b) {
    return point_less(g, PathPoint(a), PathPoint(b));
  });
  return out;
}

// Finite and lasso points of description size <= cap, sorted.
inline std::vector<PathPoint> truncated_universe(const Graph& g,
                                                 std::size_t cap,
                                                 std::uint32_t bundle_cap,
                                                 bool include_lassos = true) {
  std::vector<PathPoint> out;
  for (auto& p : enumerate_paths(g, cap, bundle_cap)) out.emplace_back(std::move(p));
  if (include_lassos)
    for (auto& l : enumerate_lassos(g, cap, bundle_cap))
      out.emplace_back(std::move(l));
  std::sort(out.begin(), out.end(), [&](const PathPoint& a, const PathPoint& b) {
    return point_less(g, a, b);
  });
  return out;
}

}  // namespace framepath
