// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// The basis of the patch topology on the path space of a discrete graph:
// canonical sets Z({mu}) minus the cylinders of finitely many one-edge
// continuations, together with the empty set.  Meets and the order are
// decided by syntactic case analysis on (mu, F).

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "framepath/errors.hpp"
#include "framepath/graph.hpp"

namespace framepath {

class BasicOpen {
 public:
  static BasicOpen empty() { return BasicOpen(); }

  // Z({mu}) with the continuations mu e, e in F, removed.  F must consist of
  // receivers of d(mu); it is stored sorted by (base name, bundle index).
  static BasicOpen make(const Graph& g, Path mu, std::vector<EdgeRef> f = {}) {
    BasicOpen b;
    b.is_empty_ = false;
    for (const auto& e : f)
      if (g.range_of(e) != mu.domain(g))
        throw DomainError("excluded edge " + g.ref_name(e) +
                          " does not continue the path");
    std::sort(f.begin(), f.end(),
              [&](const EdgeRef& a, const EdgeRef& c) { return g.ref_less(a, c); });
    f.erase(std::unique(f.begin(), f.end()), f.end());
    b.mu_ = std::move(mu);
    b.excluded_ = std::move(f);
    return b;
  }

  bool is_empty() const { return is_empty_; }
  const Path& mu() const {
    if (is_empty_) throw DomainError("empty basic open has no path part");
    return mu_;
  }
  const std::vector<EdgeRef>& excluded() const { return excluded_; }

  bool excludes(const EdgeRef& e) const {
    return std::find(excluded_.begin(), excluded_.end(), e) != excluded_.end();
  }

  friend bool operator==(const BasicOpen& a, const BasicOpen& b) {
    if (a.is_empty_ != b.is_empty_) return false;
    if (a.is_empty_) return true;
    return a.mu_ == b.mu_ && a.excluded_ == b.excluded_;
  }
  friend bool operator!=(const BasicOpen& a, const BasicOpen& b) {
    return !(a == b);
  }

 private:
  bool is_empty_ = true;
  Path mu_;
  std::vector<EdgeRef> excluded_;
};

inline std::string render(const Graph& g, const BasicOpen& a) {
  if (a.is_empty()) return "{}";
  std::string out = "(" + render(g, a.mu()) + ",{";
  for (std::size_t i = 0; i < a.excluded().size(); ++i) {
    if (i) out += ",";
    out += g.ref_name(a.excluded()[i]);
  }
  return out + "})";
}

// x lies in Z({mu}) \ U_F Z({mu e}) iff mu is a prefix of x and, when x is
// longer, its next edge avoids F.
inline bool member(const Graph& g, const PathPoint& x, const BasicOpen& a) {
  if (a.is_empty()) return false;
  const Path& mu = a.mu();
  const std::size_t k = mu.length();
  if (x.range() != mu.range()) return false;
  if (auto len = x.length(); len && *len < k) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (!(x.edge_at(i) == mu.edge(i))) return false;
  if (auto len = x.length(); len && *len == k) return true;
  return !a.excludes(x.edge_at(k));
}

// The four-case intersection rule for basis elements.
inline BasicOpen meet(const Graph& g, const BasicOpen& a, const BasicOpen& b) {
  if (a.is_empty() || b.is_empty()) return BasicOpen::empty();
  const Path& mu = a.mu();
  const Path& nu = b.mu();
  if (mu.length() == nu.length()) {
    if (!(mu == nu)) return BasicOpen::empty();
    std::vector<EdgeRef> both = a.excluded();
    both.insert(both.end(), b.excluded().begin(), b.excluded().end());
    return BasicOpen::make(g, mu, std::move(both));
  }
  const BasicOpen& longer = mu.length() > nu.length() ? a : b;
  const BasicOpen& shorter = mu.length() > nu.length() ? b : a;
  if (!shorter.mu().is_prefix_of(longer.mu())) return BasicOpen::empty();
  if (shorter.excludes(longer.mu().edge(shorter.mu().length())))
    return BasicOpen::empty();
  return longer;
}

namespace detail {

// The order criterion stated directly, without going through meet.
inline bool leq_explicit(const Graph&, const BasicOpen& a, const BasicOpen& b) {
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  const Path& nu = a.mu();
  const Path& mu = b.mu();
  if (nu.length() == mu.length()) {
    if (!(nu == mu)) return false;
    for (const auto& e : b.excluded())
      if (!a.excludes(e)) return false;
    return true;
  }
  if (nu.length() < mu.length()) return false;
  if (!mu.is_prefix_of(nu)) return false;
  return !b.excludes(nu.edge(mu.length()));
}

}  // namespace detail

inline bool leq(const Graph& g, const BasicOpen& a, const BasicOpen& b) {
  const bool by_meet = meet(g, a, b) == a;
  const bool by_rule = detail::leq_explicit(g, a, b);
  if (by_meet != by_rule)
    throw DomainError("order criterion disagrees with meet on " +
                      render(g, a) + " vs " + render(g, b));
  return by_meet;
}

struct CoveringOptions {
  // The paper places {empty, a} in every covering family; disabling keeps
  // only the continuation coverings.
  bool include_trivial = true;
};

// The CK3-motivated covering families of a basis element.
inline std::vector<std::vector<BasicOpen>> coverings(
    const Graph& g, const BasicOpen& a, CoveringOptions opts = {}) {
  std::vector<std::vector<BasicOpen>> out;
  if (a.is_empty()) {
    out.push_back({BasicOpen::empty()});
    return out;
  }
  if (opts.include_trivial) out.push_back({BasicOpen::empty(), a});
  const VertexId dom = a.mu().domain(g);
  if (classify_vertex(g, dom) == VertexClass::kRegular) {
    std::vector<BasicOpen> cont{BasicOpen::empty()};
    for (auto id : g.plain_into(dom)) {
      EdgeRef e{id, 0, false};
      if (!a.excludes(e))
        cont.push_back(BasicOpen::make(g, a.mu().extended(g, e)));
    }
    out.push_back(std::move(cont));
  }
  return out;
}

// Brute-force semantics: the members of `a` within the truncated universe.
inline std::vector<PathPoint> extensional_oracle(const Graph& g,
                                                 const BasicOpen& a,
                                                 std::size_t max_len,
                                                 std::uint32_t bundle_cap,
                                                 bool include_lassos = true) {
  std::vector<PathPoint> out;
  for (const auto& x : truncated_universe(g, max_len, bundle_cap, include_lassos))
    if (member(g, x, a)) out.push_back(x);
  return out;
}

}  // namespace framepath
