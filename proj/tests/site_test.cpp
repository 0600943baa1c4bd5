// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "framepath/frame.hpp"
#include "framepath/site.hpp"
#include "framepath/topology_site.hpp"
#include "topologies.hpp"

namespace framepath {
namespace {

// {bottom < a}
FiniteSemilattice two_chain() {
  return FiniteSemilattice({"empty", "a"}, {0, 0, 0, 1}, 0);
}

// The meet-semilattice of subsets of a base set, restricted to a family that
// is closed under intersection.  Ids follow the family order.
FiniteSemilattice subset_semilattice(const std::vector<std::uint32_t>& family) {
  const std::size_t n = family.size();
  std::vector<std::string> labels(n);
  std::vector<ElemId> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "s" + std::to_string(family[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t m = family[i] & family[j];
      auto it = std::find(family.begin(), family.end(), m);
      EXPECT_NE(it, family.end()) << "family not meet-closed";
      table[i * n + j] = static_cast<ElemId>(it - family.begin());
    }
  }
  auto bot = std::find(family.begin(), family.end(), 0u);
  return FiniteSemilattice(std::move(labels), std::move(table),
                           static_cast<ElemId>(bot - family.begin()));
}

TEST(Semilattice, ValidateAcceptsChainRejectsBrokenTable) {
  two_chain().validate();
  // idempotence broken at element 1
  FiniteSemilattice bad({"empty", "a"}, {0, 0, 0, 0}, 0);
  EXPECT_THROW(bad.validate(), DomainError);
}

TEST(CheckCoverage, TwoChainWithTrivialCoveringsIsStable) {
  auto lat = two_chain();
  Coverage cov(2);
  cov.add(1, {0, 1});
  cov.add(0, {0});
  EXPECT_TRUE(check_coverage(lat, cov).empty());
}

TEST(CheckCoverage, MemberAboveTargetIsStructural) {
  auto lat = two_chain();
  Coverage cov(2);
  cov.add(0, {1});  // a is not below bottom
  EXPECT_THROW(check_coverage(lat, cov), DomainError);
}

// Diamond bottom < x, y < t with x ∧ y = bottom.
FiniteSemilattice diamond() {
  return subset_semilattice({0u, 1u, 2u, 3u});
}

Coverage diamond_coverage_complete() {
  Coverage cov(4);
  cov.add(3, {1, 2});  // t covered by its two sides
  cov.add(1, {0, 1});
  cov.add(2, {0, 2});
  cov.add(0, {0});
  return cov;
}

TEST(CheckCoverage, DroppedStabilizationIsReportedExactly) {
  auto lat = diamond();
  auto cov = diamond_coverage_complete();
  EXPECT_TRUE(check_coverage(lat, cov).empty());

  Coverage broken(4);
  broken.add(3, {1, 2});
  broken.add(1, {0, 1});
  // C(y) lost its stabilized covering {bottom, y}.
  broken.add(0, {0});
  auto violations = check_coverage(lat, broken);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].element, 3u);
  EXPECT_EQ(violations[0].covering, (Covering{1, 2}));
  EXPECT_EQ(violations[0].under, 2u);
  EXPECT_EQ(violations[0].stabilized, (Covering{0, 2}));
}

TEST(CheckCoverage, StabilityClosureRepairsTheDrop) {
  auto lat = diamond();
  Coverage broken(4);
  broken.add(3, {1, 2});
  broken.add(1, {0, 1});
  broken.add(0, {0});
  auto fixed = stability_closure(lat, broken);
  EXPECT_TRUE(check_coverage(lat, fixed).empty());
  EXPECT_TRUE(fixed.has(2, {0, 2}));
}

TEST(CIdealGenerated, EmptySeedDependsOnBottomRule) {
  auto lat = two_chain();
  // With the empty-open identification the least ideal is {bottom}.
  Coverage cov(2);
  auto least = c_ideal_generated(lat, cov, std::vector<ElemId>{});
  EXPECT_EQ(least.count(), 1u);
  EXPECT_TRUE(least.contains(0));
  // Without any relations the least ideal is empty.
  auto free_cov = Coverage::free_of_relations(2);
  EXPECT_EQ(c_ideal_generated(lat, free_cov, std::vector<ElemId>{}).count(), 0u);
}

TEST(CIdealGenerated, SingleSeedInCoverageFreeLatticeIsLowerSet) {
  auto lat = two_chain();
  auto free_cov = Coverage::free_of_relations(2);
  auto ideal = c_ideal_generated(lat, free_cov, std::vector<ElemId>{1});
  EXPECT_EQ(ideal.count(), 2u);  // the full lower set of a
}

TEST(CIdealGenerated, CoverPiecesForceTheCoveredElement) {
  auto lat = subset_semilattice({0u, 1u, 2u, 3u});
  Coverage cov(4);
  cov.add(3, {1, 2});
  auto ideal = c_ideal_generated(lat, cov, std::vector<ElemId>{1, 2});
  EXPECT_TRUE(ideal.contains(3));
  EXPECT_EQ(ideal.count(), 4u);
}

TEST(CIdealGenerated, IsAClosureOperator) {
  // Exhaustive on the 8-element powerset of three atoms with a few covers.
  std::vector<std::uint32_t> family{0, 1, 2, 3, 4, 5, 6, 7};
  auto lat = subset_semilattice(family);
  Coverage cov(8);
  cov.add(7, {1, 2, 4});
  cov.add(3, {1, 2});
  cov.add(6, {2, 4});
  std::vector<CIdeal> closures;
  for (std::uint32_t seed = 0; seed < 256; ++seed) {
    DynBitset bits(8);
    for (std::size_t i = 0; i < 8; ++i)
      if ((seed >> i) & 1) bits.set(i);
    CIdeal cl = c_ideal_generated(lat, cov, bits);
    EXPECT_TRUE(bits.subset_of(cl.members()));                     // extensive
    EXPECT_EQ(c_ideal_generated(lat, cov, cl.members()), cl);      // idempotent
    closures.push_back(cl);
  }
  for (std::uint32_t s = 0; s < 256; ++s)
    for (std::uint32_t t = 0; t < 256; ++t)
      if ((s & t) == s)  // seed s ⊆ seed t
        EXPECT_TRUE(closures[s].members().subset_of(closures[t].members()));
}

TEST(EnumerateCIdeals, SierpinskiFrameMatchesItsTopology) {
  // Opens of the Sierpinski space: {}, {0}, {0,1}.
  std::vector<DynBitset> opens(3, DynBitset(2));
  opens[1].set(0);
  opens[2].set(0);
  opens[2].set(1);
  auto site = site_from_topology(2, opens);
  auto frame = enumerate_c_ideals(site.lat, site.cov);
  EXPECT_EQ(frame.size(), 3u);
}

TEST(EnumerateCIdeals, DiscreteTwoPointBasisWithSingletonCover) {
  // Elements {}, {x}, {y}, {x,y}; one covering: the two singletons cover top.
  auto lat = subset_semilattice({0u, 1u, 2u, 3u});
  Coverage cov(4);
  cov.add(3, {1, 2});
  auto frame = enumerate_c_ideals(lat, cov);
  EXPECT_EQ(frame.size(), 4u);
}

TEST(EnumerateCIdeals, CoverageFreeTwoChainKeepsAllLowerSets) {
  auto lat = two_chain();
  auto frame = enumerate_c_ideals(lat, Coverage::free_of_relations(2));
  EXPECT_EQ(frame.size(), 3u);
}

TEST(EnumerateCIdeals, RefusesBeyondSizeGuard) {
  std::vector<std::uint32_t> family;
  for (std::uint32_t i = 0; i < 16; ++i) family.push_back(i);
  auto lat = subset_semilattice(family);
  Coverage cov(16);
  EXPECT_THROW(enumerate_c_ideals(lat, cov), DomainError);
  EnumerationLimits raised;
  raised.max_elements = 16;
  EXPECT_NO_THROW(enumerate_c_ideals(lat, cov, raised));
}

// The C-ideal frame of a finite topology site is the topology itself, with
// meet and join matching under the union map.
void expect_frame_is_topology(const TopologySite& site) {
  EnumerationLimits limits;
  limits.max_elements = 16;
  auto frame = enumerate_c_ideals(site.lat, site.cov, limits);
  ASSERT_EQ(frame.size(), site.extent.size());
  auto union_of = [&](std::size_t idx) {
    DynBitset u(site.n_points);
    frame.ideal(idx).members().for_each(
        [&](std::size_t a) { u |= site.extent[a]; });
    return u;
  };
  std::vector<DynBitset> images;
  for (std::size_t i = 0; i < frame.size(); ++i) images.push_back(union_of(i));
  for (std::size_t i = 0; i < frame.size(); ++i) {
    EXPECT_TRUE(std::find(site.extent.begin(), site.extent.end(), images[i]) !=
                site.extent.end());
    for (std::size_t j = 0; j < frame.size(); ++j) {
      if (i != j) EXPECT_FALSE(images[i] == images[j]);
      EXPECT_EQ(images[frame.meet_index(i, j)], images[i] & images[j]);
      DynBitset join_target(site.n_points);
      // In a finite topology the join of opens is their union.
      join_target = images[i] | images[j];
      EXPECT_EQ(images[frame.join_index(i, j)], join_target);
    }
  }
}

TEST(EnumerateCIdeals, ThreePointTopologiesRoundTrip) {
  for (const auto& top : testing::topologies_up_to_homeomorphism(3)) {
    auto site = site_from_topology(3, testing::to_bitsets(3, top));
    expect_frame_is_topology(site);
  }
}

TEST(Nucleus, FixedPointOnAlreadyClosedIdeal) {
  auto lat = subset_semilattice({0u, 1u, 2u, 3u});
  Coverage c = Coverage(4);
  Coverage cprime(4);
  cprime.add(3, {1, 2});
  // The full ideal is closed under everything.
  DynBitset all(4);
  for (std::size_t i = 0; i < 4; ++i) all.set(i);
  CIdeal top{all};
  EXPECT_EQ(nucleus(lat, c, cprime, top), top);
}

TEST(Nucleus, RejectsNonIdealInput) {
  auto lat = subset_semilattice({0u, 1u, 2u, 3u});
  DynBitset not_lower(4);
  not_lower.set(3);  // top without its lower set
  EXPECT_THROW(nucleus(lat, Coverage(4), Coverage(4), CIdeal{not_lower}),
               DomainError);
}

TEST(Nucleus, LawsHoldOnTenElementInstance) {
  // Intersection-closed family of subsets of {0,1,2,3}, ten elements.  The
  // nucleus laws presuppose meet-stable coverages, so the declared covers
  // are closed under stabilization first.
  std::vector<std::uint32_t> family{0b0000, 0b0001, 0b0010, 0b0100, 0b1000,
                                    0b0011, 0b0101, 0b1100, 0b0111, 0b1111};
  auto lat = subset_semilattice(family);
  ASSERT_EQ(lat.size(), 10u);
  Coverage c(10);
  c.add(5, {1, 2});  // {0,1} = {0} ∪ {1}
  c.add(9, {5, 7});  // full = {0,1} ∪ {2,3}
  c.add(8, {5, 6});  // {0,1,2} = {0,1} ∪ {0,2}
  c = stability_closure(lat, c);
  Coverage cprime(10);
  cprime.add(6, {1, 3});  // {0,2} = {0} ∪ {2}
  cprime.add(9, {8, 4});  // full = {0,1,2} ∪ {3}
  cprime = stability_closure(lat, cprime);
  auto frame = enumerate_c_ideals(lat, c);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const CIdeal& ideal = frame.ideal(i);
    CIdeal closed = nucleus(lat, c, cprime, ideal);
    EXPECT_TRUE(ideal.members().subset_of(closed.members()));
    EXPECT_EQ(nucleus(lat, c, cprime, closed), closed);
    for (std::size_t j = 0; j < frame.size(); ++j) {
      const CIdeal& other = frame.ideal(j);
      CIdeal lhs = nucleus(lat, c, cprime,
                           CIdeal{ideal.members() & other.members()});
      CIdeal rhs{closed.members() &
                 nucleus(lat, c, cprime, other).members()};
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(PointsOfFrame, DiscreteTwoPointSpaceHasTwoPoints) {
  std::vector<DynBitset> opens(4, DynBitset(2));
  opens[1].set(0);
  opens[2].set(1);
  opens[3].set(0);
  opens[3].set(1);
  auto site = site_from_topology(2, opens);
  auto frame = enumerate_c_ideals(site.lat, site.cov);
  EXPECT_EQ(points_of_frame(frame).size(), 2u);
}

TEST(PointsOfFrame, DiscreteSpacePointsAreRecovered) {
  // frames of T1 finite spaces: every discrete topology on n points yields
  // exactly n frame points
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<DynBitset> opens;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      DynBitset b(n);
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) b.set(i);
      opens.push_back(std::move(b));
    }
    auto site = site_from_topology(n, opens);
    EnumerationLimits limits;
    limits.max_elements = 16;
    auto frame = enumerate_c_ideals(site.lat, site.cov, limits);
    EXPECT_EQ(points_of_frame(frame).size(), n);
  }
}

TEST(PointsOfFrame, TwoElementFrameHasOnePoint) {
  auto lat = two_chain();
  auto frame = enumerate_c_ideals(lat, Coverage(2));
  ASSERT_EQ(frame.size(), 2u);
  EXPECT_EQ(points_of_frame(frame).size(), 1u);
}

TEST(SublocaleSubspace, EmptyNewCoverageKeepsUniverse) {
  std::vector<DynBitset> opens(4, DynBitset(2));
  opens[1].set(0);
  opens[2].set(1);
  opens[3].set(0);
  opens[3].set(1);
  auto site = site_from_topology(2, opens);
  auto kept = sublocale_subspace(site.lat, site.cov, Coverage(4), 2,
                                 site.extent);
  EXPECT_EQ(kept.size(), 2u);
}

TEST(SublocaleSubspace, CoveringMissingAPointRemovesIt) {
  std::vector<DynBitset> opens(4, DynBitset(2));
  opens[1].set(0);
  opens[2].set(1);
  opens[3].set(0);
  opens[3].set(1);
  auto site = site_from_topology(2, opens);
  // Find the ids of {0} and the full set in the interned order.
  ElemId full = 0, x_only = 0;
  for (ElemId i = 0; i < 4; ++i) {
    if (site.extent[i].count() == 2) full = i;
    if (site.extent[i].count() == 1 && site.extent[i].test(0)) x_only = i;
  }
  Coverage cprime(4);
  cprime.add(full, {x_only});
  auto kept = sublocale_subspace(site.lat, site.cov, cprime, 2, site.extent);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0], 0u);
}

TEST(SublocaleSubspace, RejectsMembershipThatBreaksMeets) {
  auto lat = subset_semilattice({0u, 1u, 2u, 3u});
  std::vector<DynBitset> extent(4, DynBitset(2));
  extent[1].set(0);
  extent[2].set(0);  // {x}∩{y} should be empty but both claim point 0
  extent[3].set(0);
  extent[3].set(1);
  EXPECT_THROW(
      sublocale_subspace(lat, Coverage(4), Coverage(4), 2, extent),
      DomainError);
}

}  // namespace
}  // namespace framepath
