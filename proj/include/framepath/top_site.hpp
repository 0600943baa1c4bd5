// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// Truncated export of the topological-graph basis into the site kernel.
// Elements are single-box basics Z(U) with box length at most `max_len`,
// generated from the per-vertex cylinders by coordinate splits, singleton
// continuation pieces and pairwise meets.  The declared coverings are the
// trivial pair {0, a}, the fine split of each coordinate (one piece per
// plain edge, per leading bundle member, plus the cofinite remainder) and
// the singleton-piece continuation covering when d(U) admits one.  This
// family is closed under stabilization, so the coverage is meet-stable on
// the nose; all bundle index sets stay below the cap, which keeps the
// remainder pieces uniform across elements.

#pragma once

#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "framepath/errors.hpp"
#include "framepath/graph.hpp"
#include "framepath/open_sets.hpp"
#include "framepath/site.hpp"
#include "framepath/topgraph.hpp"

namespace framepath {

struct TopSiteOptions {
  std::size_t max_len = 2;       // box length bound
  std::uint32_t bundle_cap = 2;  // leading bundle members split off singly
  bool include_trivial = true;
  std::size_t max_elements = 6000;
};

struct TopSite {
  FiniteSemilattice lat;
  Coverage cov;
  std::vector<TopBasic> elements;
  std::unordered_map<std::string, ElemId> index;

  ElemId id_of(const Graph& g, const TopBasic& b) const {
    auto it = index.find(b.render(g));
    if (it == index.end()) throw DomainError("basic not in exported site");
    return it->second;
  }
};

namespace detail {

// Pieces of the fine split of one coordinate of a single-box basic.
inline std::vector<TopBasic> fine_split_pieces(const Graph& g,
                                               const TopBasic& a,
                                               std::size_t coord,
                                               std::uint32_t cap) {
  const PathBox& box = a.u().boxes().front();
  std::vector<TopBasic> out;
  for (auto e : box.coords[coord].plain())
    out.push_back(with_coordinate(g, a, box, coord,
                                  OpenEdgeSet::of_plain({e})));
  for (const auto& part : box.coords[coord].parts()) {
    for (std::uint32_t i = 0; i < cap; ++i)
      if (box.coords[coord].contains(EdgeRef{part.bundle, i, true}))
        out.push_back(with_coordinate(g, a, box, coord,
                                      OpenEdgeSet::pick(part.bundle, {i})));
    if (part.cofinite) {
      std::vector<std::uint32_t> excl = part.indices;
      for (std::uint32_t i = 0; i < cap; ++i) excl.push_back(i);
      out.push_back(with_coordinate(
          g, a, box, coord, OpenEdgeSet::copick(part.bundle, std::move(excl))));
    }
    // Picked indices at or above the cap never arise here: every pick in the
    // export stays below it.
  }
  return out;
}

inline std::vector<TopBasic> continuation_pieces(const Graph& g,
                                                 const TopBasic& a) {
  std::vector<TopBasic> out;
  const auto cont = continuation_covering(g, a.u().domain_image(g));
  if (!cont.covering) return out;
  for (auto v : a.u().domain_image(g))
    for (auto e : g.plain_into(v))
      out.push_back(extend_by_edges(g, a, OpenEdgeSet::of_plain({e})));
  return out;
}

}  // namespace detail

inline TopSite top_site_export(const Graph& g, TopSiteOptions opts = {}) {
  std::vector<TopBasic> elems{TopBasic::empty()};
  std::unordered_map<std::string, ElemId> index{{elems[0].render(g), 0}};
  std::deque<ElemId> queue;

  auto intern = [&](const TopBasic& b) -> ElemId {
    auto key = b.render(g);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const auto id = static_cast<ElemId>(elems.size());
    if (elems.size() >= opts.max_elements)
      throw DomainError("topological site export exceeds its element guard");
    elems.push_back(b);
    index.emplace(std::move(key), id);
    queue.push_back(id);
    return id;
  };

  for (std::size_t n = 0; n <= opts.max_len; ++n) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      PathBox box;
      box.roots = {v};
      for (std::size_t i = 0; i < n; ++i)
        box.coords.push_back(OpenEdgeSet::full(g));
      TopBasic b = TopBasic::make(g, OpenPathSet::make(g, n, {box}), {});
      if (!b.is_empty()) intern(b);
    }
  }

  while (!queue.empty()) {
    const ElemId id = queue.front();
    queue.pop_front();
    const TopBasic a = elems[id];  // copy: elems may reallocate below
    for (std::size_t j = 0; j < a.level(); ++j)
      for (const auto& piece : detail::fine_split_pieces(g, a, j, opts.bundle_cap))
        if (!piece.is_empty()) intern(piece);
    if (a.level() < opts.max_len)
      for (const auto& piece : detail::continuation_pieces(g, a))
        if (!piece.is_empty()) intern(piece);
    const std::size_t snapshot = elems.size();
    for (std::size_t other = 1; other < snapshot; ++other) {
      const TopBasic m = top_meet(g, a, elems[other]);
      if (!m.is_empty()) intern(m);
    }
  }

  const std::size_t n = elems.size();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = elems[i].render(g);
  std::vector<ElemId> table(n * n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      const TopBasic m = top_meet(g, elems[i], elems[j]);
      ElemId mid = 0;
      if (!m.is_empty()) {
        auto it = index.find(m.render(g));
        if (it == index.end())
          throw DomainError("topological site export is not meet-closed");
        mid = it->second;
      }
      table[i * n + j] = mid;
      table[j * n + i] = mid;
    }
  }
  FiniteSemilattice lat(std::move(labels), std::move(table), 0);

  Coverage cov(n);
  cov.add(0, Covering{0});
  for (ElemId a = 1; a < n; ++a) {
    const TopBasic& basic = elems[a];
    if (opts.include_trivial) cov.add(a, Covering{0, a});
    for (std::size_t j = 0; j < basic.level(); ++j) {
      Covering split{0};
      for (const auto& piece :
           detail::fine_split_pieces(g, basic, j, opts.bundle_cap))
        if (!piece.is_empty()) split.push_back(index.at(piece.render(g)));
      cov.add(a, std::move(split));
    }
    if (basic.level() < opts.max_len &&
        continuation_covering(g, basic.u().domain_image(g)).covering) {
      Covering cont{0};
      for (const auto& piece : detail::continuation_pieces(g, basic))
        if (!piece.is_empty()) cont.push_back(index.at(piece.render(g)));
      cov.add(a, std::move(cont));
    }
  }
  return TopSite{std::move(lat), std::move(cov), std::move(elems),
                 std::move(index)};
}

}  // namespace framepath
