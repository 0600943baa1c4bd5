// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// The frame of C-ideals of a finite site, its points, nuclei given by
// enlarged coverages, and the pointwise subspace criterion.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "framepath/bitset.hpp"
#include "framepath/errors.hpp"
#include "framepath/site.hpp"

namespace framepath {

struct EnumerationLimits {
  // Full subset scan is 2^n; past this many elements the enumeration refuses.
  std::size_t max_elements = 14;
  std::size_t max_ideals = 1u << 20;
};

// The frame Cidl(A, C) of a finite site, materialized as a lattice:
// meet is intersection, join is the generated C-ideal of the union.
// Owns a copy of its site, so it stays valid on its own.
class CIdealFrame {
 public:
  CIdealFrame(FiniteSemilattice lat, Coverage cov, std::vector<CIdeal> ideals)
      : lat_(std::move(lat)), cov_(std::move(cov)), ideals_(std::move(ideals)) {
    std::sort(ideals_.begin(), ideals_.end());
    for (std::size_t i = 0; i < ideals_.size(); ++i)
      index_.emplace(ideals_[i].members(), i);
    bottom_ = index_of(c_ideal_generated(lat_, cov_, std::vector<ElemId>{}));
    DynBitset all(lat_.size());
    for (ElemId a = 0; a < lat_.size(); ++a) all.set(a);
    top_ = index_of(CIdeal(all));
  }

  std::size_t size() const { return ideals_.size(); }
  const CIdeal& ideal(std::size_t i) const { return ideals_.at(i); }
  std::size_t bottom_index() const { return bottom_; }
  std::size_t top_index() const { return top_; }
  const FiniteSemilattice& base() const { return lat_; }
  const Coverage& coverage() const { return cov_; }

  std::size_t index_of(const CIdeal& ideal) const {
    auto it = index_.find(ideal.members());
    if (it == index_.end()) throw DomainError("not a C-ideal of this frame");
    return it->second;
  }

  bool leq(std::size_t i, std::size_t j) const {
    return ideals_[i].members().subset_of(ideals_[j].members());
  }

  std::size_t meet_index(std::size_t i, std::size_t j) const {
    return index_of(CIdeal(ideals_[i].members() & ideals_[j].members()));
  }

  std::size_t join_index(std::size_t i, std::size_t j) const {
    return index_of(c_ideal_generated(lat_, cov_,
                                      ideals_[i].members() | ideals_[j].members()));
  }

 private:
  FiniteSemilattice lat_;
  Coverage cov_;
  std::vector<CIdeal> ideals_;
  std::unordered_map<DynBitset, std::size_t, DynBitsetHash> index_;
  std::size_t bottom_ = 0, top_ = 0;
};

// All C-ideals, by full subset scan with cheap pruning.  Refuses beyond the
// size guard; raise it knowingly for instances like 4-point topologies.
inline CIdealFrame enumerate_c_ideals(const FiniteSemilattice& lat,
                                      const Coverage& cov,
                                      EnumerationLimits limits = {}) {
  const std::size_t n = lat.size();
  if (n > limits.max_elements)
    throw DomainError("semilattice has " + std::to_string(n) +
                      " elements; C-ideal enumeration is guarded at " +
                      std::to_string(limits.max_elements));
  if (n > 24) throw DomainError("C-ideal enumeration is capped at 24 elements");

  // Down-sets and covering bit masks as machine words.
  std::vector<std::uint32_t> down(n, 0);
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b)
      if (lat.leq(b, a)) down[a] |= (1u << b);
  struct CoverMask {
    ElemId target;
    std::uint32_t members;
  };
  std::vector<CoverMask> covers;
  for (ElemId a = 0; a < n; ++a)
    for (const auto& s : cov.of(a)) {
      std::uint32_t m = 0;
      for (ElemId x : s) m |= (1u << x);
      covers.push_back({a, m});
    }
  const std::uint32_t bottom_bit =
      cov.bottom_is_empty_join() ? (1u << lat.bottom()) : 0;

  std::vector<CIdeal> ideals;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    const auto m = static_cast<std::uint32_t>(mask);
    if ((m & bottom_bit) != bottom_bit) continue;
    bool ok = true;
    for (std::uint32_t rest = m; rest && ok; rest &= rest - 1) {
      const auto a = static_cast<ElemId>(__builtin_ctz(rest));
      if ((down[a] & ~m) != 0) ok = false;
    }
    if (!ok) continue;
    for (const auto& c : covers) {
      if ((m >> c.target) & 1) continue;
      if ((c.members & ~m) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    DynBitset bits(n);
    for (std::uint32_t rest = m; rest; rest &= rest - 1)
      bits.set(static_cast<std::size_t>(__builtin_ctz(rest)));
    ideals.emplace_back(std::move(bits));
    if (ideals.size() > limits.max_ideals)
      throw DomainError("C-ideal count exceeds limit");
  }
  return CIdealFrame(lat, cov, std::move(ideals));
}

// Smallest ideal of the combined coverage containing I.  Restricting to
// C-ideals this map is inflationary, idempotent and meet-preserving; its
// fixed points are the ideals of the enlarged coverage.
inline CIdeal nucleus(const FiniteSemilattice& lat, const Coverage& cov_c,
                      const Coverage& cov_cprime, const CIdeal& ideal) {
  if (!is_c_ideal(lat, cov_c, ideal.members()))
    throw DomainError("nucleus input is not a C-ideal of the base coverage");
  const Coverage merged = Coverage::merged(cov_c, cov_cprime);
  return c_ideal_generated(lat, merged, ideal.members());
}

// A frame homomorphism into {0, 1}, tabulated over the frame's elements.
// Its kernel has a maximum, which is meet-prime.
struct FramePoint {
  std::vector<std::uint8_t> value;  // indexed like the frame
  std::size_t prime_index;          // max of the kernel
};

inline bool is_meet_prime(const CIdealFrame& frame, std::size_t m) {
  if (m == frame.top_index()) return false;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (frame.leq(i, m)) continue;
    for (std::size_t j = 0; j < frame.size(); ++j) {
      if (frame.leq(j, m)) continue;
      if (frame.leq(frame.meet_index(i, j), m)) return false;
    }
  }
  return true;
}

// One point per meet-prime element m, with value(x) = [x not below m].
// Every candidate is verified to preserve finite meets and binary joins
// (with bottom and top); on a finite lattice that implies all joins.
inline std::vector<FramePoint> points_of_frame(const CIdealFrame& frame) {
  std::vector<FramePoint> points;
  for (std::size_t m = 0; m < frame.size(); ++m) {
    if (!is_meet_prime(frame, m)) continue;
    FramePoint p;
    p.prime_index = m;
    p.value.resize(frame.size());
    for (std::size_t x = 0; x < frame.size(); ++x)
      p.value[x] = frame.leq(x, m) ? 0 : 1;
    if (p.value[frame.bottom_index()] != 0 || p.value[frame.top_index()] != 1)
      throw DomainError("frame point fails bound preservation");
    for (std::size_t i = 0; i < frame.size(); ++i)
      for (std::size_t j = 0; j < frame.size(); ++j) {
        if (p.value[frame.meet_index(i, j)] != (p.value[i] & p.value[j]))
          throw DomainError("frame point fails meet preservation");
        if (p.value[frame.join_index(i, j)] != (p.value[i] | p.value[j]))
          throw DomainError("frame point fails join preservation");
      }
    points.push_back(std::move(p));
  }
  return points;
}

// Pointwise subspace cut out by the new relations: keep x when every
// C'-covering of every element containing x still reaches x through one of
// its members.  `extent[a]` lists the points of element a; it must at least
// respect binary meets.
inline std::vector<std::size_t> sublocale_subspace(
    const FiniteSemilattice& lat, const Coverage& cov_c,
    const Coverage& cov_cprime, std::size_t n_points,
    const std::vector<DynBitset>& extent) {
  if (extent.size() != lat.size())
    throw DomainError("extent table does not match semilattice");
  if (cov_c.element_count() != lat.size() ||
      cov_cprime.element_count() != lat.size())
    throw DomainError("coverage does not match semilattice");
  for (const auto& e : extent)
    if (e.size() != n_points) throw DomainError("extent universe mismatch");
  for (ElemId a = 0; a < lat.size(); ++a)
    for (ElemId b = 0; b < lat.size(); ++b)
      if (!((extent[a] & extent[b]) == extent[lat.meet(a, b)]))
        throw DomainError("membership does not realize meets at " +
                          lat.label(a) + ", " + lat.label(b));

  std::vector<std::size_t> kept;
  for (std::size_t x = 0; x < n_points; ++x) {
    bool keep = true;
    for (ElemId a = 0; a < lat.size() && keep; ++a) {
      if (!extent[a].test(x)) continue;
      for (const auto& s : cov_cprime.of(a)) {
        bool reached = false;
        for (ElemId b : s)
          if (extent[b].test(x)) {
            reached = true;
            break;
          }
        if (!reached) {
          keep = false;
          break;
        }
      }
    }
    if (keep) kept.push_back(x);
  }
  return kept;
}

}  // namespace framepath
