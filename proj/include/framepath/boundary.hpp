// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// Boundary membership on the frame side: a point survives into the sublocale
// iff every covering of every basic open containing it reaches it through a
// member.  The witness search ranges over the basics (prefix, {}) of the
// point; a continuation covering of (mu, F) can exclude a finite xi only when
// mu = xi, and regularity of d(xi) makes F irrelevant, so this bound decides
// the criterion.  The direct definition d(mu) singular serves as the oracle.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "framepath/basic_open.hpp"
#include "framepath/graph.hpp"
#include "framepath/site.hpp"

namespace framepath {

inline bool boundary_member_direct(const Graph& g, const PathPoint& x) {
  if (x.infinite()) return true;
  return is_singular(classify_vertex(g, x.as_path()->domain(g)));
}

inline bool boundary_member(const Graph& g, const PathPoint& x,
                            CoveringOptions opts = {}) {
  // Lassos meet every continuation covering of every prefix; the scan over
  // one full period below is the honest check of that.
  const std::size_t prefix_bound =
      x.infinite() ? x.as_lasso()->description_length()
                   : *x.length();
  for (std::size_t k = 0; k <= prefix_bound; ++k) {
    const BasicOpen a = BasicOpen::make(g, x.prefix(g, k));
    if (!member(g, x, a)) continue;
    for (const auto& s : coverings(g, a, opts)) {
      bool reached = false;
      for (const auto& b : s)
        if (member(g, x, b)) {
          reached = true;
          break;
        }
      if (!reached) return false;
    }
  }
  return true;
}

enum class BoundaryMethod { kCk3, kTopgraph, kDirect };

// Sorted boundary points: finite members up to max_len plus canonical lasso
// representatives up to the same description size.
template <typename MemberFn>
std::vector<PathPoint> boundary_space_by(const Graph& g, std::size_t max_len,
                                         std::uint32_t bundle_cap,
                                         MemberFn&& in_boundary) {
  std::vector<PathPoint> out;
  for (const auto& x : truncated_universe(g, max_len, bundle_cap))
    if (in_boundary(g, x)) out.push_back(x);
  return out;
}

inline std::vector<PathPoint> boundary_space(const Graph& g,
                                             std::size_t max_len,
                                             std::uint32_t bundle_cap) {
  return boundary_space_by(g, max_len, bundle_cap,
                           [](const Graph& gr, const PathPoint& x) {
                             return boundary_member(gr, x);
                           });
}

// ---------------------------------------------------------------------------
// Truncated export of the basis with its coverage into the site kernel.
//
// Elements: the empty set plus every (mu, F) with |mu| <= depth and F drawn
// from a per-vertex sample of receivers, so the element set stays closed
// under meets.  Continuation coverings are declared for |mu| < depth over the
// full receiver set of the (regular) domain; elements at the boundary depth
// keep only the trivial covering.  Declared this way the coverage is meet-
// stable on the nose, which check_coverage re-verifies.

struct Ck3SiteOptions {
  std::size_t depth = 3;
  // Bundle members allowed inside mu.
  std::uint32_t path_bundle_cap = 1;
  // Per vertex, F ranges over subsets of: the first `plain_sample` plain
  // receivers plus the first `bundle_sample` members of each bundle.
  std::size_t plain_sample = 2;
  std::uint32_t bundle_sample = 1;
  bool include_trivial = true;
};

struct Ck3Site {
  FiniteSemilattice lat;
  Coverage cov;
  std::vector<BasicOpen> elements;
  std::unordered_map<std::string, ElemId> index;  // keyed by rendered form

  ElemId id_of(const Graph& g, const BasicOpen& b) const {
    auto it = index.find(render(g, b));
    if (it == index.end()) throw DomainError("basic open not in exported site");
    return it->second;
  }
};

inline Ck3Site ck3_site_export(const Graph& g, Ck3SiteOptions opts = {}) {
  std::vector<BasicOpen> elems;
  elems.push_back(BasicOpen::empty());
  for (const auto& mu : enumerate_paths(g, opts.depth, opts.path_bundle_cap)) {
    std::vector<EdgeRef> sample;
    std::size_t plain_taken = 0;
    for (const auto& e : g.receivers(mu.domain(g), opts.bundle_sample)) {
      if (e.is_bundle) {
        sample.push_back(e);
      } else if (plain_taken < opts.plain_sample) {
        sample.push_back(e);
        ++plain_taken;
      }
    }
    const std::size_t m = sample.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      std::vector<EdgeRef> f;
      for (std::size_t i = 0; i < m; ++i)
        if ((mask >> i) & 1) f.push_back(sample[i]);
      elems.push_back(BasicOpen::make(g, mu, std::move(f)));
    }
  }

  const std::size_t n = elems.size();
  std::unordered_map<std::string, ElemId> index;
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = render(g, elems[i]);
    index.emplace(labels[i], static_cast<ElemId>(i));
  }
  auto find_id = [&](const BasicOpen& b) -> ElemId {
    auto it = index.find(render(g, b));
    if (it == index.end())
      throw DomainError("exported site is not meet-closed");
    return it->second;
  };

  std::vector<ElemId> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const ElemId m = find_id(meet(g, elems[i], elems[j]));
      table[i * n + j] = m;
      table[j * n + i] = m;
    }
  }
  FiniteSemilattice lat(std::move(labels), std::move(table), 0);

  Coverage cov(n);
  cov.add(0, Covering{0});  // the empty set covered by itself
  for (ElemId a = 1; a < n; ++a) {
    const BasicOpen& basic = elems[a];
    if (opts.include_trivial) cov.add(a, Covering{0, a});
    const Path& mu = basic.mu();
    if (mu.length() >= opts.depth) continue;
    const VertexId dom = mu.domain(g);
    if (classify_vertex(g, dom) != VertexClass::kRegular) continue;
    Covering cont{0};
    for (auto id : g.plain_into(dom)) {
      EdgeRef e{id, 0, false};
      if (!basic.excludes(e))
        cont.push_back(find_id(BasicOpen::make(g, mu.extended(g, e))));
    }
    cov.add(a, std::move(cont));
  }
  return Ck3Site{std::move(lat), std::move(cov), std::move(elems),
                 std::move(index)};
}

}  // namespace framepath
