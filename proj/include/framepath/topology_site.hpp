// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// Sites presenting finite topologies.  The family of opens (any
// intersection-closed family containing the empty set) becomes the element
// set; the declared coverage is the reduced join-cover family: each open is
// covered by the set of its proper sub-opens whenever their union fills it.
// For lower-closed subsets this induces exactly the same C-ideals as the
// family of all join-covers, so the C-ideal frame is the generated topology.

#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "framepath/bitset.hpp"
#include "framepath/errors.hpp"
#include "framepath/site.hpp"

namespace framepath {

struct TopologySite {
  FiniteSemilattice lat;
  Coverage cov;
  std::vector<DynBitset> extent;  // element id -> set of points
  std::size_t n_points = 0;
};

inline std::string point_set_label(const DynBitset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t p) {
    if (!first) out += ",";
    out += "p" + std::to_string(p);
    first = false;
  });
  return out + "}";
}

inline TopologySite site_from_topology(std::size_t n_points,
                                       std::vector<DynBitset> opens) {
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  std::unordered_map<DynBitset, ElemId, DynBitsetHash> ids;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (opens[i].size() != n_points)
      throw DomainError("open set universe mismatch");
    ids.emplace(opens[i], static_cast<ElemId>(i));
  }
  const DynBitset empty_set(n_points);
  auto it = ids.find(empty_set);
  if (it == ids.end())
    throw DomainError("family of opens must contain the empty set");
  const ElemId bottom = it->second;

  const std::size_t n = opens.size();
  std::vector<std::string> labels(n);
  std::vector<ElemId> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = point_set_label(opens[i]);
    for (std::size_t j = 0; j < n; ++j) {
      auto m = ids.find(opens[i] & opens[j]);
      if (m == ids.end())
        throw DomainError("family of opens is not closed under intersection");
      table[i * n + j] = m->second;
    }
  }

  FiniteSemilattice lat(std::move(labels), std::move(table), bottom);
  Coverage cov(n);
  for (ElemId a = 0; a < n; ++a) {
    if (a == bottom) continue;
    Covering proper;
    DynBitset covered(n_points);
    for (ElemId b = 0; b < n; ++b) {
      if (b == a || !opens[b].subset_of(opens[a])) continue;
      proper.push_back(b);
      covered |= opens[b];
    }
    if (covered == opens[a]) cov.add(a, std::move(proper));
  }
  return TopologySite{std::move(lat), std::move(cov), std::move(opens),
                      n_points};
}

}  // namespace framepath
