// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// The cylinder topology as a site.  For a finite acyclic graph without
// bundles the whole path space is finite; the open cylinder sets form a
// semilattice and each cylinder is covered by the singleton decompositions
// of its level, which impose exactly the union relations of the topology.
// The points of the resulting frame recover the paths.

#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "framepath/bitset.hpp"
#include "framepath/errors.hpp"
#include "framepath/frame.hpp"
#include "framepath/graph.hpp"
#include "framepath/site.hpp"

namespace framepath {

struct CylinderSite {
  FiniteSemilattice lat;
  Coverage cov;
  std::vector<DynBitset> extent;  // per element: members among `universe`
  std::vector<Path> universe;     // all paths, sorted
};

namespace detail {

inline bool has_cycle(const Graph& g) {
  // DFS over the composition digraph r(e) -> d(e).
  const std::size_t n = g.vertex_count();
  std::vector<int> state(n, 0);
  std::vector<std::vector<VertexId>> next(n);
  for (std::uint32_t e = 0; e < g.edge_count(); ++e)
    next[g.edge(e).r].push_back(g.edge(e).d);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (state[s]) continue;
    stack.push_back(s);
    std::vector<std::size_t> cursor{0};
    state[s] = 1;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      if (cursor.back() < next[v].size()) {
        const VertexId w = next[v][cursor.back()++];
        if (state[w] == 1) return true;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back(w);
          cursor.push_back(0);
        }
      } else {
        state[v] = 2;
        stack.pop_back();
        cursor.pop_back();
      }
    }
  }
  return false;
}

}  // namespace detail

inline CylinderSite cylinder_site_export(const Graph& g, std::size_t depth,
                                         std::size_t max_level_width = 12) {
  if (g.bundle_count() > 0)
    throw DomainError("cylinder site export requires a bundle-free graph");
  if (detail::has_cycle(g))
    throw DomainError("cylinder site export requires an acyclic graph");
  std::vector<Path> universe = enumerate_paths(g, depth + 1, 0);
  for (const auto& p : universe)
    if (p.length() > depth)
      throw DomainError("graph has paths longer than the requested depth");

  // Group paths by length.
  std::vector<std::vector<std::size_t>> levels(depth + 1);
  for (std::size_t i = 0; i < universe.size(); ++i)
    levels[universe[i].length()].push_back(i);

  // Extent of Z({paths at one level chosen by mask}).
  auto cylinder_extent = [&](std::size_t len,
                             const std::vector<std::size_t>& chosen) {
    DynBitset bits(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) {
      const Path& x = universe[i];
      if (x.length() < len) continue;
      const Path head = x.prefix(len);
      for (std::size_t c : chosen)
        if (universe[c] == head) {
          bits.set(i);
          break;
        }
    }
    return bits;
  };

  // Intern elements by extent; remember every (level, member set) reading.
  std::vector<DynBitset> extents;
  std::unordered_map<DynBitset, ElemId, DynBitsetHash> ids;
  struct Reading {
    ElemId elem;
    std::size_t level;
    std::vector<std::size_t> members;  // universe indices at that level
  };
  std::vector<Reading> readings;
  auto intern = [&](DynBitset bits) -> ElemId {
    auto it = ids.find(bits);
    if (it != ids.end()) return it->second;
    const auto id = static_cast<ElemId>(extents.size());
    ids.emplace(bits, id);
    extents.push_back(std::move(bits));
    return id;
  };
  intern(DynBitset(universe.size()));  // the empty cylinder

  for (std::size_t len = 0; len <= depth; ++len) {
    const auto& lvl = levels[len];
    if (lvl.size() > max_level_width)
      throw DomainError("level " + std::to_string(len) +
                        " is too wide for cylinder export");
    for (std::size_t mask = 1; mask < (std::size_t{1} << lvl.size()); ++mask) {
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < lvl.size(); ++i)
        if ((mask >> i) & 1) chosen.push_back(lvl[i]);
      ElemId id = intern(cylinder_extent(len, chosen));
      readings.push_back(Reading{id, len, std::move(chosen)});
    }
  }

  const std::size_t n = extents.size();
  std::vector<std::string> labels(n);
  std::vector<ElemId> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "Z" + std::to_string(i);
    for (std::size_t j = 0; j <= i; ++j) {
      auto it = ids.find(extents[i] & extents[j]);
      if (it == ids.end())
        throw DomainError("cylinder extents are not meet-closed");
      table[i * n + j] = it->second;
      table[j * n + i] = it->second;
    }
  }
  FiniteSemilattice lat(std::move(labels), std::move(table), 0);

  // Singleton decompositions: Z(A) = union of Z({y}), y in A, per level.
  Coverage cov(n);
  std::unordered_map<std::size_t, ElemId> singleton_id;  // universe idx -> elem
  for (const auto& r : readings)
    if (r.members.size() == 1) singleton_id[r.members.front()] = r.elem;
  for (const auto& r : readings) {
    if (r.members.size() <= 1) continue;
    Covering s;
    for (std::size_t y : r.members) s.push_back(singleton_id.at(y));
    cov.add(r.elem, std::move(s));
  }
  return CylinderSite{std::move(lat), std::move(cov), std::move(extents),
                      std::move(universe)};
}

// Matches each frame point with the unique path inducing it; index i of the
// result is the universe position for point i.  Fails if the pairing is not
// the expected bijection or a point disagrees with path membership anywhere.
inline std::vector<std::size_t> match_points_to_paths(
    const CylinderSite& site, const CIdealFrame& frame,
    const std::vector<FramePoint>& points) {
  const std::size_t n_paths = site.universe.size();
  // Union extent of every frame element.
  std::vector<DynBitset> opens;
  opens.reserve(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    DynBitset u(n_paths);
    frame.ideal(i).members().for_each(
        [&](std::size_t a) { u |= site.extent[a]; });
    opens.push_back(std::move(u));
  }
  std::vector<std::size_t> out;
  std::vector<bool> used(n_paths, false);
  for (const auto& p : points) {
    std::size_t found = n_paths;
    for (std::size_t y = 0; y < n_paths; ++y) {
      bool matches = true;
      for (std::size_t i = 0; i < frame.size() && matches; ++i)
        if (p.value[i] != (opens[i].test(y) ? 1 : 0)) matches = false;
      if (matches) {
        if (found != n_paths)
          throw DomainError("frame point matches two distinct paths");
        found = y;
      }
    }
    if (found == n_paths)
      throw DomainError("frame point matches no path");
    if (used[found]) throw DomainError("two frame points share a path");
    used[found] = true;
    out.push_back(found);
  }
  if (out.size() != n_paths)
    throw DomainError("point count differs from path count");
  return out;
}

}  // namespace framepath
