// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// Open subsets of the discrete edge space and of the spaces of length-n
// paths.  Edge sets are finite/cofinite per bundle plus a finite set of
// plain edges; path sets are finite unions of boxes (root vertex set times
// per-step edge sets, intersected with the composable paths).  Pruning a box
// removes unreachable slack, making the single-box representation canonical
// for its extension.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framepath/errors.hpp"
#include "framepath/graph.hpp"

namespace framepath {

class OpenEdgeSet {
 public:
  struct BundlePart {
    std::uint32_t bundle = 0;
    bool cofinite = false;
    std::vector<std::uint32_t> indices;  // picked, or excluded when cofinite

    friend bool operator==(const BundlePart& a, const BundlePart& b) {
      return a.bundle == b.bundle && a.cofinite == b.cofinite &&
             a.indices == b.indices;
    }
  };

  static OpenEdgeSet none() { return OpenEdgeSet(); }

  static OpenEdgeSet full(const Graph& g) {
    OpenEdgeSet s;
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) s.plain_.push_back(e);
    for (std::uint32_t b = 0; b < g.bundle_count(); ++b)
      s.parts_.push_back(BundlePart{b, true, {}});
    return s;
  }

  static OpenEdgeSet single(const EdgeRef& e) {
    OpenEdgeSet s;
    if (e.is_bundle)
      s.parts_.push_back(BundlePart{e.id, false, {e.index}});
    else
      s.plain_.push_back(e.id);
    return s;
  }

  static OpenEdgeSet of_plain(std::vector<std::uint32_t> edges) {
    OpenEdgeSet s;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    s.plain_ = std::move(edges);
    return s;
  }

  static OpenEdgeSet pick(std::uint32_t bundle,
                          std::vector<std::uint32_t> indices) {
    OpenEdgeSet s;
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (!indices.empty())
      s.parts_.push_back(BundlePart{bundle, false, std::move(indices)});
    return s;
  }

  static OpenEdgeSet copick(std::uint32_t bundle,
                            std::vector<std::uint32_t> excluded) {
    OpenEdgeSet s;
    std::sort(excluded.begin(), excluded.end());
    excluded.erase(std::unique(excluded.begin(), excluded.end()),
                   excluded.end());
    s.parts_.push_back(BundlePart{bundle, true, std::move(excluded)});
    return s;
  }

  const std::vector<std::uint32_t>& plain() const { return plain_; }
  const std::vector<BundlePart>& parts() const { return parts_; }

  bool is_empty() const { return plain_.empty() && parts_.empty(); }
  // Finite, hence relatively compact in the discrete edge space.
  bool is_compact() const {
    for (const auto& p : parts_)
      if (p.cofinite) return false;
    return true;
  }
  std::size_t finite_size() const {
    std::size_t n = plain_.size();
    for (const auto& p : parts_) n += p.indices.size();
    return n;
  }

  bool contains(const EdgeRef& e) const {
    if (!e.is_bundle)
      return std::binary_search(plain_.begin(), plain_.end(), e.id);
    for (const auto& p : parts_)
      if (p.bundle == e.id) {
        const bool listed =
            std::binary_search(p.indices.begin(), p.indices.end(), e.index);
        return p.cofinite ? !listed : listed;
      }
    return false;
  }

  OpenEdgeSet intersect(const OpenEdgeSet& o) const {
    OpenEdgeSet out;
    std::set_intersection(plain_.begin(), plain_.end(), o.plain_.begin(),
                          o.plain_.end(), std::back_inserter(out.plain_));
    for (const auto& p : parts_) {
      for (const auto& q : o.parts_) {
        if (p.bundle != q.bundle) continue;
        BundlePart r;
        r.bundle = p.bundle;
        if (p.cofinite && q.cofinite) {
          r.cofinite = true;
          std::set_union(p.indices.begin(), p.indices.end(), q.indices.begin(),
                         q.indices.end(), std::back_inserter(r.indices));
        } else if (!p.cofinite && !q.cofinite) {
          r.cofinite = false;
          std::set_intersection(p.indices.begin(), p.indices.end(),
                                q.indices.begin(), q.indices.end(),
                                std::back_inserter(r.indices));
          if (r.indices.empty()) continue;
        } else {
          const auto& picked = p.cofinite ? q.indices : p.indices;
          const auto& excl = p.cofinite ? p.indices : q.indices;
          r.cofinite = false;
          std::set_difference(picked.begin(), picked.end(), excl.begin(),
                              excl.end(), std::back_inserter(r.indices));
          if (r.indices.empty()) continue;
        }
        out.parts_.push_back(std::move(r));
      }
    }
    return out;
  }

  OpenEdgeSet minus(const EdgeRef& e) const {
    OpenEdgeSet out = *this;
    if (!e.is_bundle) {
      out.plain_.erase(std::remove(out.plain_.begin(), out.plain_.end(), e.id),
                       out.plain_.end());
      return out;
    }
    for (auto& p : out.parts_) {
      if (p.bundle != e.id) continue;
      if (p.cofinite) {
        p.indices.insert(
            std::upper_bound(p.indices.begin(), p.indices.end(), e.index),
            e.index);
        p.indices.erase(std::unique(p.indices.begin(), p.indices.end()),
                        p.indices.end());
      } else {
        p.indices.erase(
            std::remove(p.indices.begin(), p.indices.end(), e.index),
            p.indices.end());
      }
    }
    out.drop_empty_parts();
    return out;
  }

  // Members whose range lies in `roots` (per plain edge; per whole bundle).
  OpenEdgeSet restricted_to_range(const Graph& g,
                                  const std::vector<VertexId>& roots) const {
    OpenEdgeSet out;
    for (auto e : plain_)
      if (std::binary_search(roots.begin(), roots.end(), g.edge(e).r))
        out.plain_.push_back(e);
    for (const auto& p : parts_)
      if (std::binary_search(roots.begin(), roots.end(), g.bundle(p.bundle).r))
        out.parts_.push_back(p);
    return out;
  }

  OpenEdgeSet restricted_to_domain(const Graph& g,
                                   const std::vector<VertexId>& targets) const {
    OpenEdgeSet out;
    for (auto e : plain_)
      if (std::binary_search(targets.begin(), targets.end(), g.edge(e).d))
        out.plain_.push_back(e);
    for (const auto& p : parts_)
      if (std::binary_search(targets.begin(), targets.end(),
                             g.bundle(p.bundle).d))
        out.parts_.push_back(p);
    return out;
  }

  std::vector<VertexId> range_vertices(const Graph& g) const {
    std::vector<VertexId> out;
    for (auto e : plain_) out.push_back(g.edge(e).r);
    for (const auto& p : parts_) out.push_back(g.bundle(p.bundle).r);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<VertexId> domain_vertices(const Graph& g) const {
    std::vector<VertexId> out;
    for (auto e : plain_) out.push_back(g.edge(e).d);
    for (const auto& p : parts_) out.push_back(g.bundle(p.bundle).d);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string render(const Graph& g) const {
    std::string out = "{";
    bool first = true;
    for (auto e : plain_) {
      if (!first) out += ",";
      out += g.edge(e).name;
      first = false;
    }
    for (const auto& p : parts_) {
      if (!first) out += ",";
      first = false;
      out += g.bundle(p.bundle).name;
      out += p.cofinite ? "\\[" : "[";
      for (std::size_t i = 0; i < p.indices.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.indices[i]);
      }
      out += "]";
    }
    return out + "}";
  }

  friend bool operator==(const OpenEdgeSet& a, const OpenEdgeSet& b) {
    return a.plain_ == b.plain_ && a.parts_ == b.parts_;
  }

 private:
  void drop_empty_parts() {
    parts_.erase(std::remove_if(parts_.begin(), parts_.end(),
                                [](const BundlePart& p) {
                                  return !p.cofinite && p.indices.empty();
                                }),
                 parts_.end());
  }

  std::vector<std::uint32_t> plain_;  // sorted
  std::vector<BundlePart> parts_;     // sorted by bundle id
};

// One product block: root vertices times per-step edge sets, read inside the
// composable paths.
struct PathBox {
  std::vector<VertexId> roots;      // sorted
  std::vector<OpenEdgeSet> coords;  // step i holds the (i+1)-st edge

  std::size_t length() const { return coords.size(); }

  bool contains(const Graph& g, const Path& p) const {
    if (p.length() != coords.size()) return false;
    if (!std::binary_search(roots.begin(), roots.end(), p.range()))
      return false;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!coords[i].contains(p.edge(i))) return false;
    return true;
  }

  std::string render(const Graph& g) const {
    std::string out = "[{";
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i) out += ",";
      out += g.vertex_name(roots[i]);
    }
    out += "}";
    for (const auto& c : coords) out += ";" + c.render(g);
    return out + "]";
  }

  friend bool operator==(const PathBox& a, const PathBox& b) {
    return a.roots == b.roots && a.coords == b.coords;
  }
};

// Removes slack: every root, edge and bundle that no composable path of the
// box uses.  Returns nothing when the box holds no path.
inline std::optional<PathBox> prune_box(const Graph& g, PathBox box) {
  const std::size_t n = box.length();
  std::vector<std::vector<VertexId>> forward(n + 1), backward(n + 1);
  {
    std::vector<VertexId> cur;
    for (auto v : box.roots)
      if (v < g.vertex_count()) cur.push_back(v);
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    forward[0] = cur;
    for (std::size_t i = 0; i < n; ++i)
      forward[i + 1] =
          box.coords[i].restricted_to_range(g, forward[i]).domain_vertices(g);
  }
  {
    std::vector<VertexId> all;
    for (VertexId v = 0; v < g.vertex_count(); ++v) all.push_back(v);
    backward[n] = all;
    for (std::size_t i = n; i-- > 0;)
      backward[i] =
          box.coords[i].restricted_to_domain(g, backward[i + 1]).range_vertices(g);
  }
  std::vector<std::vector<VertexId>> live(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    std::set_intersection(forward[i].begin(), forward[i].end(),
                          backward[i].begin(), backward[i].end(),
                          std::back_inserter(live[i]));
    if (live[i].empty()) return std::nullopt;
  }
  PathBox out;
  out.roots = live[0];
  for (std::size_t i = 0; i < n; ++i)
    out.coords.push_back(box.coords[i]
                             .restricted_to_range(g, live[i])
                             .restricted_to_domain(g, live[i + 1]));
  return out;
}

// An open set of length-n paths as a finite union of pruned boxes.
class OpenPathSet {
 public:
  static OpenPathSet empty(std::size_t length) {
    OpenPathSet u;
    u.length_ = length;
    return u;
  }

  static OpenPathSet make(const Graph& g, std::size_t length,
                          std::vector<PathBox> boxes) {
    OpenPathSet u;
    u.length_ = length;
    for (auto& b : boxes) {
      if (b.length() != length)
        throw DomainError("box length does not match the open path set");
      if (auto pruned = prune_box(g, std::move(b))) u.boxes_.push_back(*pruned);
    }
    std::sort(u.boxes_.begin(), u.boxes_.end(),
              [&](const PathBox& a, const PathBox& b) {
                return a.render(g) < b.render(g);
              });
    u.boxes_.erase(std::unique(u.boxes_.begin(), u.boxes_.end()),
                   u.boxes_.end());
    return u;
  }

  static OpenPathSet single_path(const Graph& g, const Path& p) {
    PathBox box;
    box.roots = {p.range()};
    for (std::size_t i = 0; i < p.length(); ++i)
      box.coords.push_back(OpenEdgeSet::single(p.edge(i)));
    return make(g, p.length(), {std::move(box)});
  }

  static OpenPathSet full_level(const Graph& g, std::size_t length) {
    PathBox box;
    for (VertexId v = 0; v < g.vertex_count(); ++v) box.roots.push_back(v);
    for (std::size_t i = 0; i < length; ++i)
      box.coords.push_back(OpenEdgeSet::full(g));
    return make(g, length, {std::move(box)});
  }

  std::size_t length() const { return length_; }
  const std::vector<PathBox>& boxes() const { return boxes_; }
  bool is_empty() const { return boxes_.empty(); }

  bool contains(const Graph& g, const Path& p) const {
    for (const auto& b : boxes_)
      if (b.contains(g, p)) return true;
    return false;
  }

  // The set of domain vertices of its members (exact, via pruned boxes).
  std::vector<VertexId> domain_image(const Graph& g) const {
    std::vector<VertexId> out;
    for (const auto& b : boxes_) {
      if (length_ == 0) {
        out.insert(out.end(), b.roots.begin(), b.roots.end());
      } else {
        auto targets = b.coords.back().domain_vertices(g);
        out.insert(out.end(), targets.begin(), targets.end());
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string render(const Graph& g) const {
    std::string out = "Z" + std::to_string(length_) + "(";
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
      if (i) out += "|";
      out += boxes_[i].render(g);
    }
    return out + ")";
  }

  friend bool operator==(const OpenPathSet& a, const OpenPathSet& b) {
    return a.length_ == b.length_ && a.boxes_ == b.boxes_;
  }

 private:
  std::size_t length_ = 0;
  std::vector<PathBox> boxes_;
};

// Intersection after aligning lengths: the shorter set constrains the prefix
// coordinates of the longer one; composability supplies the range condition
// on the continuation.
inline OpenPathSet open_path_meet(const Graph& g, const OpenPathSet& a,
                                  const OpenPathSet& b) {
  const OpenPathSet& low = a.length() <= b.length() ? a : b;
  const OpenPathSet& high = a.length() <= b.length() ? b : a;
  std::vector<PathBox> boxes;
  for (const auto& hb : high.boxes()) {
    for (const auto& lb : low.boxes()) {
      PathBox r;
      std::set_intersection(hb.roots.begin(), hb.roots.end(), lb.roots.begin(),
                            lb.roots.end(), std::back_inserter(r.roots));
      r.coords = hb.coords;
      bool dead = r.roots.empty();
      for (std::size_t i = 0; i < lb.coords.size() && !dead; ++i) {
        r.coords[i] = r.coords[i].intersect(lb.coords[i]);
        dead = r.coords[i].is_empty();
      }
      if (!dead) boxes.push_back(std::move(r));
    }
  }
  return OpenPathSet::make(g, high.length(), std::move(boxes));
}

// U minus the paths extending `kappa` (|kappa| <= |U|): boxes split by the
// first position disagreeing with kappa.
inline OpenPathSet subtract_prefix(const Graph& g, const OpenPathSet& u,
                                   const Path& kappa) {
  if (kappa.length() > u.length())
    throw DomainError("subtracted prefix is longer than the open set");
  std::vector<PathBox> boxes;
  for (const auto& box : u.boxes()) {
    // disagree at the root
    PathBox root_off = box;
    root_off.roots.erase(
        std::remove(root_off.roots.begin(), root_off.roots.end(),
                    kappa.range()),
        root_off.roots.end());
    boxes.push_back(std::move(root_off));
    if (!std::binary_search(box.roots.begin(), box.roots.end(), kappa.range()))
      continue;  // no box path starts like kappa
    // agree up to position i, disagree at edge i
    for (std::size_t i = 0; i < kappa.length(); ++i) {
      PathBox piece = box;
      piece.roots = {kappa.range()};
      for (std::size_t j = 0; j < i; ++j)
        piece.coords[j] =
            piece.coords[j].intersect(OpenEdgeSet::single(kappa.edge(j)));
      piece.coords[i] = piece.coords[i].minus(kappa.edge(i));
      boxes.push_back(std::move(piece));
    }
  }
  return OpenPathSet::make(g, u.length(), std::move(boxes));
}

}  // namespace framepath
