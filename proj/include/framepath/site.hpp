// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// Finite meet-semilattices with coverages: the generic engine behind every
// site in this library.  Elements are interned ids with user labels; meets
// are memoized in a table.  A covering of `a` is a finite set of elements
// below `a`; a coverage assigns each element a set of coverings, subject to
// the meet-stability condition (checked, never silently repaired).

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "framepath/bitset.hpp"
#include "framepath/errors.hpp"

namespace framepath {

using ElemId = std::uint32_t;

class FiniteSemilattice {
 public:
  FiniteSemilattice(std::vector<std::string> labels,
                    std::vector<ElemId> meet_table, ElemId bottom)
      : labels_(std::move(labels)),
        table_(std::move(meet_table)),
        bottom_(bottom) {
    if (table_.size() != labels_.size() * labels_.size())
      throw DomainError("meet table size does not match element count");
    if (bottom_ >= labels_.size())
      throw DomainError("bottom id out of range");
  }

  std::size_t size() const { return labels_.size(); }
  ElemId bottom() const { return bottom_; }
  const std::string& label(ElemId a) const { return labels_.at(a); }

  ElemId meet(ElemId a, ElemId b) const { return table_[a * size() + b]; }
  bool leq(ElemId a, ElemId b) const { return meet(a, b) == a; }

  // Structural check: idempotent, commutative, associative, bottom least.
  // Associativity is cubic; beyond `assoc_limit` elements it is sampled on a
  // deterministic subset instead of swept exhaustively.
  void validate(std::size_t assoc_limit = 128) const {
    const std::size_t n = size();
    for (ElemId a = 0; a < n; ++a) {
      if (meet(a, a) != a) throw DomainError("meet not idempotent at " + label(a));
      if (meet(bottom_, a) != bottom_)
        throw DomainError("bottom not least under " + label(a));
      for (ElemId b = 0; b < n; ++b) {
        if (meet(a, b) != meet(b, a))
          throw DomainError("meet not commutative at " + label(a) + ", " + label(b));
      }
    }
    const std::size_t stride = n <= assoc_limit ? 1 : (n / assoc_limit + 1);
    for (ElemId a = 0; a < n; a += stride)
      for (ElemId b = 0; b < n; b += stride)
        for (ElemId c = 0; c < n; c += stride)
          if (meet(meet(a, b), c) != meet(a, meet(b, c)))
            throw DomainError("meet not associative at " + label(a) + ", " +
                              label(b) + ", " + label(c));
  }

 private:
  std::vector<std::string> labels_;
  std::vector<ElemId> table_;  // row-major n*n
  ElemId bottom_;
};

// A covering: sorted, duplicate-free set of element ids.
using Covering = std::vector<ElemId>;

inline Covering make_covering(std::vector<ElemId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

class Coverage {
 public:
  explicit Coverage(std::size_t n_elements, bool bottom_is_empty_join = true)
      : covers_(n_elements), bottom_is_empty_join_(bottom_is_empty_join) {}

  // A coverage carrying no relations at all, not even the identification of
  // the least element with the empty join.  C-ideals are then exactly the
  // lower sets.
  static Coverage free_of_relations(std::size_t n_elements) {
    return Coverage(n_elements, false);
  }

  std::size_t element_count() const { return covers_.size(); }

  void add(ElemId a, Covering s) {
    auto sorted = make_covering(std::move(s));
    auto& list = covers_.at(a);
    if (std::find(list.begin(), list.end(), sorted) == list.end())
      list.push_back(std::move(sorted));
  }

  const std::vector<Covering>& of(ElemId a) const { return covers_.at(a); }

  bool has(ElemId a, const Covering& s) const {
    const auto& list = covers_.at(a);
    return std::find(list.begin(), list.end(), s) != list.end();
  }

  // The least element stands for the empty open, which is the join of the
  // empty family; with this rule every C-ideal contains it.
  bool bottom_is_empty_join() const { return bottom_is_empty_join_; }

  static Coverage merged(const Coverage& c1, const Coverage& c2) {
    if (c1.element_count() != c2.element_count())
      throw DomainError("cannot merge coverages over different element sets");
    Coverage out(c1.element_count(),
                 c1.bottom_is_empty_join() || c2.bottom_is_empty_join());
    for (ElemId a = 0; a < c1.element_count(); ++a) {
      for (const auto& s : c1.of(a)) out.add(a, s);
      for (const auto& s : c2.of(a)) out.add(a, s);
    }
    return out;
  }

 private:
  std::vector<std::vector<Covering>> covers_;
  bool bottom_is_empty_join_;
};

// One failed meet-stability instance: S covers `element`, `under` lies below
// it, and the stabilized family {s ∧ under : s ∈ S} is not a declared
// covering of `under`.
struct StabilityViolation {
  ElemId element;
  Covering covering;
  ElemId under;
  Covering stabilized;
};

inline Covering stabilize(const FiniteSemilattice& lat, const Covering& s,
                          ElemId b) {
  Covering out;
  out.reserve(s.size());
  for (ElemId x : s) out.push_back(lat.meet(x, b));
  return make_covering(std::move(out));
}

// Scans every declared covering against every element below its target.
// Members of a covering that fail s ≤ a are a structural error, not a
// stability violation.
inline std::vector<StabilityViolation> check_coverage(
    const FiniteSemilattice& lat, const Coverage& cov) {
  lat.validate();
  if (cov.element_count() != lat.size())
    throw DomainError("coverage element count does not match semilattice");
  const std::size_t n = lat.size();
  for (ElemId a = 0; a < n; ++a)
    for (const auto& s : cov.of(a))
      for (ElemId x : s)
        if (!lat.leq(x, a))
          throw DomainError("covering member " + lat.label(x) +
                            " is not below covered element " + lat.label(a));
  std::vector<StabilityViolation> out;
  for (ElemId a = 0; a < n; ++a) {
    if (cov.of(a).empty()) continue;
    for (ElemId b = 0; b < n; ++b) {
      if (!lat.leq(b, a)) continue;
      for (const auto& s : cov.of(a)) {
        Covering st = stabilize(lat, s, b);
        if (!cov.has(b, st))
          out.push_back(StabilityViolation{a, s, b, std::move(st)});
      }
    }
  }
  return out;
}

// Adds every stabilized covering to the coverage until stability holds.
// Optional repair step; the sites built in this library are declared stable
// and never need it.
inline Coverage stability_closure(const FiniteSemilattice& lat, Coverage cov) {
  bool changed = true;
  while (changed) {
    changed = false;
    auto violations = check_coverage(lat, cov);
    for (const auto& v : violations) {
      if (!cov.has(v.under, v.stabilized)) {
        cov.add(v.under, v.stabilized);
        changed = true;
      }
    }
  }
  return cov;
}

// A C-ideal: lower-closed, closed under declared coverings, and containing
// the least element whenever the coverage identifies it with the empty join.
class CIdeal {
 public:
  CIdeal() = default;
  explicit CIdeal(DynBitset members) : members_(std::move(members)) {}

  const DynBitset& members() const { return members_; }
  bool contains(ElemId a) const { return members_.test(a); }
  std::size_t count() const { return members_.count(); }

  friend bool operator==(const CIdeal& a, const CIdeal& b) {
    return a.members_ == b.members_;
  }
  friend bool operator<(const CIdeal& a, const CIdeal& b) {
    return a.members_ < b.members_;
  }

 private:
  DynBitset members_;
};

namespace detail {

inline std::vector<DynBitset> down_sets(const FiniteSemilattice& lat) {
  std::vector<DynBitset> down(lat.size(), DynBitset(lat.size()));
  for (ElemId a = 0; a < lat.size(); ++a)
    for (ElemId b = 0; b < lat.size(); ++b)
      if (lat.leq(b, a)) down[a].set(b);
  return down;
}

}  // namespace detail

inline bool is_c_ideal(const FiniteSemilattice& lat, const Coverage& cov,
                       const DynBitset& set) {
  if (cov.bottom_is_empty_join() && !set.test(lat.bottom())) return false;
  bool ok = true;
  set.for_each([&](std::size_t a) {
    if (!ok) return;
    for (ElemId b = 0; b < lat.size(); ++b)
      if (lat.leq(b, static_cast<ElemId>(a)) && !set.test(b)) {
        ok = false;
        return;
      }
  });
  if (!ok) return false;
  for (ElemId a = 0; a < lat.size(); ++a) {
    if (set.test(a)) continue;
    for (const auto& s : cov.of(a)) {
      bool covered = true;
      for (ElemId x : s)
        if (!set.test(x)) {
          covered = false;
          break;
        }
      if (covered) return false;
    }
  }
  return true;
}

// Least C-ideal containing `seed`: the fixed point of alternating
// lower-closure and cover-closure.
inline CIdeal c_ideal_generated(const FiniteSemilattice& lat,
                                const Coverage& cov, const DynBitset& seed) {
  if (seed.size() != lat.size())
    throw DomainError("seed universe does not match semilattice");
  auto down = detail::down_sets(lat);
  DynBitset cur(lat.size());
  seed.for_each([&](std::size_t a) { cur |= down[a]; });
  if (cov.bottom_is_empty_join()) cur.set(lat.bottom());
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElemId a = 0; a < lat.size(); ++a) {
      if (cur.test(a)) continue;
      for (const auto& s : cov.of(a)) {
        bool covered = true;
        for (ElemId x : s)
          if (!cur.test(x)) {
            covered = false;
            break;
          }
        if (covered) {
          cur |= down[a];
          changed = true;
          break;
        }
      }
    }
  }
  return CIdeal(cur);
}

inline CIdeal c_ideal_generated(const FiniteSemilattice& lat,
                                const Coverage& cov,
                                const std::vector<ElemId>& seed) {
  DynBitset bits(lat.size());
  for (ElemId a : seed) bits.set(a);
  return c_ideal_generated(lat, cov, bits);
}

// The C-ideal generated by a single element: the image of the canonical map
// from the site into its frame.
inline CIdeal principal_c_ideal(const FiniteSemilattice& lat,
                                const Coverage& cov, ElemId a) {
  return c_ideal_generated(lat, cov, std::vector<ElemId>{a});
}

}  // namespace framepath
