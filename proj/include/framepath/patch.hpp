// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// Patch-topology basics Z(U) \ Z(K) on the path space of a discrete graph:
// U a finite set of paths of one length, K a finite set of longer paths.
// Normal form folds short K-members into U, so equality and emptiness are
// syntactic; a normalized nonempty basic contains every path of its U part.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "framepath/errors.hpp"
#include "framepath/graph.hpp"

namespace framepath {

class PatchBasic {
 public:
  static PatchBasic empty() { return PatchBasic(); }

  static PatchBasic make(const Graph& g, std::vector<Path> u,
                         std::vector<Path> k) {
    if (u.empty()) return empty();
    const std::size_t len = u.front().length();
    for (const auto& p : u)
      if (p.length() != len)
        throw DomainError("patch basic U-part must have one path length");
    std::sort(u.begin(), u.end(),
              [&](const Path& a, const Path& b) { return path_less(g, a, b); });
    u.erase(std::unique(u.begin(), u.end()), u.end());
    std::sort(k.begin(), k.end(),
              [&](const Path& a, const Path& b) { return path_less(g, a, b); });
    k.erase(std::unique(k.begin(), k.end()), k.end());

    // Fold members of K at or below the U level into the U part.
    std::vector<Path> deep;
    for (const auto& kappa : k) {
      if (kappa.length() <= len) {
        std::vector<Path> kept;
        for (const auto& p : u)
          if (!kappa.is_prefix_of(p)) kept.push_back(p);
        u = std::move(kept);
      } else {
        deep.push_back(kappa);
      }
    }
    if (u.empty()) return empty();

    // Keep a deep K-member only if it extends a surviving U path and no
    // other K-member is a proper prefix of it.
    std::vector<Path> pruned;
    for (const auto& kappa : deep) {
      bool extends_u = false;
      for (const auto& p : u)
        if (p.is_prefix_of(kappa)) {
          extends_u = true;
          break;
        }
      if (!extends_u) continue;
      bool shadowed = false;
      for (const auto& other : deep)
        if (!(other == kappa) && other.is_prefix_of(kappa)) {
          shadowed = true;
          break;
        }
      if (!shadowed) pruned.push_back(kappa);
    }

    PatchBasic pb;
    pb.empty_ = false;
    pb.u_ = std::move(u);
    pb.k_ = std::move(pruned);
    return pb;
  }

  bool is_empty() const { return empty_; }
  const std::vector<Path>& u() const { return u_; }
  const std::vector<Path>& k() const { return k_; }
  std::size_t level() const {
    if (empty_) throw DomainError("empty patch basic has no level");
    return u_.front().length();
  }

  friend bool operator==(const PatchBasic& a, const PatchBasic& b) {
    if (a.empty_ != b.empty_) return false;
    if (a.empty_) return true;
    return a.u_ == b.u_ && a.k_ == b.k_;
  }
  friend bool operator!=(const PatchBasic& a, const PatchBasic& b) {
    return !(a == b);
  }

 private:
  bool empty_ = true;
  std::vector<Path> u_;
  std::vector<Path> k_;
};

inline std::string render(const Graph& g, const PatchBasic& pb) {
  if (pb.is_empty()) return "{}";
  std::string out = "(U={";
  for (std::size_t i = 0; i < pb.u().size(); ++i) {
    if (i) out += ",";
    out += render(g, pb.u()[i]);
  }
  out += "},K={";
  for (std::size_t i = 0; i < pb.k().size(); ++i) {
    if (i) out += ",";
    out += render(g, pb.k()[i]);
  }
  return out + "})";
}

inline bool patch_member(const Graph& g, const PathPoint& x,
                         const PatchBasic& pb) {
  if (pb.is_empty()) return false;
  const std::size_t len = pb.level();
  if (auto l = x.length(); l && *l < len) return false;
  const Path head = x.prefix(g, len);
  if (std::find(pb.u().begin(), pb.u().end(), head) == pb.u().end())
    return false;
  for (const auto& kappa : pb.k()) {
    if (auto l = x.length(); l && *l < kappa.length()) continue;
    if (x.prefix(g, kappa.length()) == kappa) return false;
  }
  return true;
}

// Cylinder parts meet through prefix projection; cocompact parts unite.
inline PatchBasic patch_meet(const Graph& g, const PatchBasic& a,
                             const PatchBasic& b) {
  if (a.is_empty() || b.is_empty()) return PatchBasic::empty();
  const PatchBasic& low = a.level() <= b.level() ? a : b;
  const PatchBasic& high = a.level() <= b.level() ? b : a;
  std::vector<Path> u;
  for (const auto& p : high.u()) {
    const Path head = p.prefix(low.level());
    if (std::find(low.u().begin(), low.u().end(), head) != low.u().end())
      u.push_back(p);
  }
  std::vector<Path> k = a.k();
  k.insert(k.end(), b.k().begin(), b.k().end());
  return PatchBasic::make(g, std::move(u), std::move(k));
}

// Disjoint patch neighbourhoods of two distinct points.
inline std::pair<PatchBasic, PatchBasic> separate_points(const Graph& g,
                                                         const PathPoint& x,
                                                         const PathPoint& y) {
  if (point_equal(g, x, y))
    throw DomainError("cannot separate a point from itself");
  const std::size_t bound = x.description_length() + y.description_length() + 2;
  // First position where the words differ, range vertex counting as -1.
  if (x.range() != y.range()) {
    return {PatchBasic::make(g, {x.prefix(g, 0)}, {}),
            PatchBasic::make(g, {y.prefix(g, 0)}, {})};
  }
  const auto xl = x.length();
  const auto yl = y.length();
  for (std::size_t i = 0; i < bound; ++i) {
    const bool x_has = !xl || *xl > i;
    const bool y_has = !yl || *yl > i;
    if (x_has && y_has) {
      if (!(x.edge_at(i) == y.edge_at(i)))
        return {PatchBasic::make(g, {x.prefix(g, i + 1)}, {}),
                PatchBasic::make(g, {y.prefix(g, i + 1)}, {})};
      continue;
    }
    if (!x_has && !y_has)  // both ended together with equal words
      throw DomainError("points are equal");
    // One word is a strict prefix of the other.
    const PathPoint& shorter = x_has ? y : x;
    const PathPoint& longer = x_has ? x : y;
    const std::size_t n = *shorter.length();
    const Path wall = longer.prefix(g, n + 1);
    PatchBasic near_short = PatchBasic::make(g, {shorter.prefix(g, n)}, {wall});
    PatchBasic near_long = PatchBasic::make(g, {wall}, {});
    if (x_has) return {near_long, near_short};
    return {near_short, near_long};
  }
  throw DomainError("points are equal beyond the periodic bound");
}

struct HausdorffFailure {
  std::string x, y, reason;
};

struct HausdorffReport {
  std::size_t pairs_checked = 0;
  std::vector<HausdorffFailure> failures;
  bool all_separated() const { return failures.empty(); }
};

// Exhibits disjoint neighbourhoods for every pair of distinct points in the
// truncated universe; disjointness is certified by patch_meet collapsing to
// the empty basic and re-checked extensionally against the universe.
inline HausdorffReport hausdorff_check(const Graph& g, std::size_t universe_cap,
                                       std::uint32_t bundle_cap) {
  const auto universe = truncated_universe(g, universe_cap, bundle_cap);
  HausdorffReport report;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    for (std::size_t j = i + 1; j < universe.size(); ++j) {
      ++report.pairs_checked;
      const PathPoint& x = universe[i];
      const PathPoint& y = universe[j];
      auto fail = [&](const std::string& why) {
        report.failures.push_back({render(g, x), render(g, y), why});
      };
      try {
        const auto [nx, ny] = separate_points(g, x, y);
        if (!patch_member(g, x, nx) || !patch_member(g, y, ny)) {
          fail("witness does not contain its point");
          continue;
        }
        if (!patch_meet(g, nx, ny).is_empty()) {
          fail("witness neighbourhoods are not disjoint");
          continue;
        }
        for (const auto& z : universe)
          if (patch_member(g, z, nx) && patch_member(g, z, ny)) {
            fail("extensional overlap at " + render(g, z));
            break;
          }
      } catch (const DomainError& err) {
        fail(err.what());
      }
    }
  }
  return report;
}

}  // namespace framepath
