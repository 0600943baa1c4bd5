// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "fixtures.hpp"
#include "framepath/basic_open.hpp"
#include "framepath/graph.hpp"

namespace framepath {
namespace {

using testing::make_g1;
using testing::make_g2;
using testing::make_g3;
using testing::Rng;

EdgeRef plain(const Graph& g, const std::string& name) {
  auto id = g.find_edge(name);
  if (!id) throw DomainError("no such edge in fixture: " + name);
  return EdgeRef{*id, 0, false};
}

EdgeRef bundle_member(const Graph& g, const std::string& name,
                      std::uint32_t i) {
  auto id = g.find_bundle(name);
  if (!id) throw DomainError("no such bundle in fixture: " + name);
  return EdgeRef{*id, i, true};
}

Path parse_edges(const Graph& g, VertexId range,
                 std::vector<EdgeRef> edges) {
  return Path::make(g, range, std::move(edges));
}

TEST(ClassifyVertex, HandFixtures) {
  const Graph g1 = make_g1();
  EXPECT_EQ(classify_vertex(g1, g1.vertex_id("v1")), VertexClass::kRegular);
  EXPECT_EQ(classify_vertex(g1, g1.vertex_id("v2")), VertexClass::kRegular);
  EXPECT_EQ(classify_vertex(g1, g1.vertex_id("v3")), VertexClass::kSource);
  EXPECT_TRUE(is_singular(classify_vertex(g1, g1.vertex_id("v3"))));

  const Graph g2 = make_g2();
  EXPECT_EQ(classify_vertex(g2, g2.vertex_id("v")),
            VertexClass::kInfiniteReceiver);

  Graph isolated;
  isolated.add_vertex("w");
  EXPECT_EQ(classify_vertex(isolated, 0), VertexClass::kSource);
  EXPECT_THROW(classify_vertex(isolated, 5), DomainError);
}

TEST(Graph, RejectsDuplicateNames) {
  Graph g;
  g.add_vertex("v");
  EXPECT_THROW(g.add_vertex("v"), DomainError);
  EXPECT_THROW(g.add_edge("v", "v", "v"), DomainError);
  g.add_edge("e", "v", "v");
  EXPECT_THROW(g.add_bundle("e", "v", "v"), DomainError);
}

TEST(Path, ComposabilityIsChecked) {
  const Graph g1 = make_g1();
  const auto e = plain(g1, "e");
  const auto f = plain(g1, "f");
  EXPECT_NO_THROW(parse_edges(g1, g1.vertex_id("v1"), {e, f}));
  // f cannot come first at v1, and e cannot follow e.
  EXPECT_THROW(parse_edges(g1, g1.vertex_id("v1"), {f}), DomainError);
  EXPECT_THROW(parse_edges(g1, g1.vertex_id("v1"), {e, e}), DomainError);
}

TEST(Sigma, PrependsAndCancels) {
  const Graph g1 = make_g1();
  const auto e = plain(g1, "e");
  const auto f = plain(g1, "f");
  const PathPoint v2{Path::vertex(g1, g1.vertex_id("v2"))};
  const PathPoint just_e = sigma(g1, e, v2);
  EXPECT_EQ(render(g1, just_e), "e");

  const PathPoint ef{parse_edges(g1, g1.vertex_id("v1"), {e, f})};
  EXPECT_EQ(render(g1, sigma_inv(g1, e, ef)), "f");

  EXPECT_THROW(sigma(g1, f, v2), DomainError);        // r(v2) != d(f)=v3
  EXPECT_THROW(sigma_inv(g1, f, ef), DomainError);    // ef does not start with f
}

TEST(Sigma, RandomizedRoundTrip) {
  Rng rng(42);
  auto graphs = testing::theorem_corpus();
  int checked = 0;
  for (const auto& g : graphs) {
    auto universe = truncated_universe(g, 4, 3);
    if (universe.empty()) continue;
    // collect all edge refs with a small bundle cap
    std::vector<EdgeRef> refs;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
      for (const auto& r : g.receivers(v, 3)) refs.push_back(r);
    if (refs.empty()) continue;
    for (int trial = 0; trial < 40 && checked < 200; ++trial) {
      const auto& x = universe[rng.below(static_cast<std::uint32_t>(universe.size()))];
      const auto& e = refs[rng.below(static_cast<std::uint32_t>(refs.size()))];
      if (g.domain_of(e) != x.range()) continue;
      const PathPoint ex = sigma(g, e, x);
      EXPECT_TRUE(point_equal(g, sigma_inv(g, e, ex), x));
      ++checked;
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(LassoPath, CanonicalFormCollapsesUnfoldings) {
  const Graph g3 = make_g3();
  const auto e = plain(g3, "e");
  const Path v = Path::vertex(g3, 0);
  const Path once = parse_edges(g3, 0, {e});
  const Path twice = parse_edges(g3, 0, {e, e});
  const LassoPath simple = LassoPath::make(g3, v, once);
  const LassoPath doubled = LassoPath::make(g3, v, twice);
  const LassoPath shifted = LassoPath::make(g3, once, once);
  EXPECT_TRUE(point_equal(g3, PathPoint(doubled), PathPoint(simple)));
  EXPECT_TRUE(point_equal(g3, PathPoint(shifted), PathPoint(simple)));
  EXPECT_EQ(render(g3, shifted.canonical(g3)), "v;e");
}

TEST(Member, PrefixAndExclusionCases) {
  const Graph g1 = make_g1();
  const auto e = plain(g1, "e");
  const auto f = plain(g1, "f");
  const PathPoint ef{parse_edges(g1, g1.vertex_id("v1"), {e, f})};
  const Path just_e = parse_edges(g1, g1.vertex_id("v1"), {e});
  EXPECT_TRUE(member(g1, ef, BasicOpen::make(g1, just_e)));
  EXPECT_FALSE(member(g1, ef, BasicOpen::make(g1, just_e, {f})));

  const Graph g3 = make_g3();
  const auto loop = plain(g3, "e");
  const LassoPath lasso =
      LassoPath::make(g3, Path::vertex(g3, 0), parse_edges(g3, 0, {loop}));
  const Path ee = parse_edges(g3, 0, {loop, loop});
  EXPECT_TRUE(member(g3, PathPoint(lasso), BasicOpen::make(g3, ee)));
  EXPECT_FALSE(member(g3, PathPoint(lasso), BasicOpen::make(g3, ee, {loop})));
}

TEST(BasicOpen, ExclusionMustContinueThePath) {
  const Graph g1 = make_g1();
  const auto e = plain(g1, "e");
  // d(v1-as-path) = v1 but r(f) = v2
  EXPECT_THROW(
      BasicOpen::make(g1, Path::vertex(g1, g1.vertex_id("v1")), {plain(g1, "f")}),
      DomainError);
  EXPECT_NO_THROW(
      BasicOpen::make(g1, Path::vertex(g1, g1.vertex_id("v1")), {e}));
}

TEST(Meet, FourCaseRule) {
  const Graph g1 = make_g1();
  const auto e = plain(g1, "e");
  const auto f = plain(g1, "f");
  const Path v1 = Path::vertex(g1, g1.vertex_id("v1"));
  const Path pe = parse_edges(g1, g1.vertex_id("v1"), {e});
  const Path pf = parse_edges(g1, g1.vertex_id("v2"), {f});

  const BasicOpen a = BasicOpen::make(g1, pe, {f});
  EXPECT_EQ(meet(g1, a, BasicOpen::empty()), BasicOpen::empty());

  // equal paths unite their exclusions
  const BasicOpen same_mu =
      meet(g1, BasicOpen::make(g1, v1, {e}), BasicOpen::make(g1, v1));
  EXPECT_EQ(same_mu, BasicOpen::make(g1, v1, {e}));

  EXPECT_EQ(meet(g1, BasicOpen::make(g1, v1), a), a);
  EXPECT_EQ(meet(g1, BasicOpen::make(g1, pe), BasicOpen::make(g1, pf)),
            BasicOpen::empty());
  // the excluded continuation empties the prefix case
  EXPECT_EQ(meet(g1, BasicOpen::make(g1, v1, {e}), a), BasicOpen::empty());
}

// every canonical basic with |mu| <= mu_cap and |F| <= f_cap
std::vector<BasicOpen> all_basics(const Graph& g, std::size_t mu_cap,
                                  std::size_t f_cap, std::uint32_t bundle_cap) {
  std::vector<BasicOpen> out{BasicOpen::empty()};
  for (const auto& mu : enumerate_paths(g, mu_cap, bundle_cap)) {
    const auto recv = g.receivers(mu.domain(g), bundle_cap);
    const std::size_t n = recv.size();
    // subsets of the receiver list of size <= f_cap
    std::vector<std::vector<EdgeRef>> subsets{{}};
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t cur = subsets.size();
      for (std::size_t s = 0; s < cur; ++s) {
        if (subsets[s].size() < f_cap) {
          auto bigger = subsets[s];
          bigger.push_back(recv[i]);
          subsets.push_back(std::move(bigger));
        }
      }
    }
    for (auto& f : subsets) out.push_back(BasicOpen::make(g, mu, f));
  }
  return out;
}

std::vector<std::string> oracle_keys(const Graph& g, const BasicOpen& a,
                                     std::size_t max_len,
                                     std::uint32_t bundle_cap) {
  std::vector<std::string> keys;
  for (const auto& x : extensional_oracle(g, a, max_len, bundle_cap))
    keys.push_back(render(g, x));
  std::sort(keys.begin(), keys.end());
  return keys;
}

TEST(Meet, MatchesExtensionalIntersectionOnHandGraphs) {
  for (const Graph& g : {make_g1(), make_g2(), make_g3()}) {
    const auto basics = all_basics(g, 2, 2, 2);
    const auto universe = truncated_universe(g, 5, 2);
    std::vector<std::vector<bool>> ext;
    for (const auto& a : basics) {
      std::vector<bool> row;
      for (const auto& x : universe) row.push_back(member(g, x, a));
      ext.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < basics.size(); ++i)
      for (std::size_t j = 0; j < basics.size(); ++j) {
        const BasicOpen m = meet(g, basics[i], basics[j]);
        std::vector<bool> expect;
        for (std::size_t k = 0; k < universe.size(); ++k)
          expect.push_back(ext[i][k] && ext[j][k]);
        std::vector<bool> got;
        for (const auto& x : universe) got.push_back(member(g, x, m));
        EXPECT_EQ(got, expect)
            << render(g, basics[i]) << " meet " << render(g, basics[j]);
      }
  }
}

TEST(Meet, SemilatticeLawsRandomized) {
  Rng rng(7);
  for (const Graph& g : {make_g1(), make_g2(), make_g3()}) {
    const auto basics = all_basics(g, 3, 2, 2);
    const auto n = static_cast<std::uint32_t>(basics.size());
    for (int trial = 0; trial < 10000; ++trial) {
      const auto& a = basics[rng.below(n)];
      const auto& b = basics[rng.below(n)];
      const auto& c = basics[rng.below(n)];
      EXPECT_EQ(meet(g, a, a), a);
      EXPECT_EQ(meet(g, a, b), meet(g, b, a));
      EXPECT_EQ(meet(g, meet(g, a, b), c), meet(g, a, meet(g, b, c)));
    }
  }
}

TEST(Meet, SemilatticeLawsExhaustiveOnShortBasics) {
  for (const Graph& g : {make_g1(), make_g2(), make_g3()}) {
    const auto basics = all_basics(g, 2, 2, 2);
    for (const auto& a : basics) {
      EXPECT_EQ(meet(g, a, a), a);
      for (const auto& b : basics) {
        EXPECT_EQ(meet(g, a, b), meet(g, b, a));
        for (const auto& c : basics)
          EXPECT_EQ(meet(g, meet(g, a, b), c), meet(g, a, meet(g, b, c)));
      }
    }
  }
}

TEST(Leq, ExamplesAndOracleContainment) {
  const Graph g1 = make_g1();
  const auto e = plain(g1, "e");
  const auto f = plain(g1, "f");
  const Path v1 = Path::vertex(g1, g1.vertex_id("v1"));
  const Path pe = parse_edges(g1, g1.vertex_id("v1"), {e});
  EXPECT_TRUE(leq(g1, BasicOpen::make(g1, pe, {f}), BasicOpen::make(g1, v1)));
  EXPECT_TRUE(leq(g1, BasicOpen::make(g1, pe, {f}), BasicOpen::make(g1, pe, {f})));
  EXPECT_FALSE(leq(g1, BasicOpen::make(g1, v1), BasicOpen::make(g1, pe)));

  for (const Graph& g : {make_g1(), make_g2(), make_g3()}) {
    const auto basics = all_basics(g, 2, 2, 2);
    for (const auto& a : basics)
      for (const auto& b : basics) {
        const auto ka = oracle_keys(g, a, 5, 2);
        const auto kb = oracle_keys(g, b, 5, 2);
        const bool contained =
            std::includes(kb.begin(), kb.end(), ka.begin(), ka.end());
        EXPECT_EQ(leq(g, a, b), contained)
            << render(g, a) << " vs " << render(g, b);
      }
  }
}

TEST(Coverings, SingularAndRegularDomains) {
  const Graph g1 = make_g1();
  const auto e = plain(g1, "e");
  const auto f = plain(g1, "f");
  const Path pf = parse_edges(g1, g1.vertex_id("v2"), {f});
  // d(f) = v3 is a source: only the trivial covering
  const auto cf = coverings(g1, BasicOpen::make(g1, pf));
  ASSERT_EQ(cf.size(), 1u);
  EXPECT_EQ(cf[0], (std::vector<BasicOpen>{BasicOpen::empty(),
                                           BasicOpen::make(g1, pf)}));

  // d(v1) = v1 is regular with r^{-1}(v1) = {e}
  const Path v1 = Path::vertex(g1, g1.vertex_id("v1"));
  const auto cv = coverings(g1, BasicOpen::make(g1, v1));
  ASSERT_EQ(cv.size(), 2u);
  const Path pe = parse_edges(g1, g1.vertex_id("v1"), {e});
  EXPECT_EQ(cv[1], (std::vector<BasicOpen>{BasicOpen::empty(),
                                           BasicOpen::make(g1, pe)}));

  // infinite receiver: only the trivial covering
  const Graph g2 = make_g2();
  const auto cg2 = coverings(g2, BasicOpen::make(g2, Path::vertex(g2, 0)));
  EXPECT_EQ(cg2.size(), 1u);

  // the empty element is covered by itself alone
  const auto cempty = coverings(g1, BasicOpen::empty());
  ASSERT_EQ(cempty.size(), 1u);
  EXPECT_EQ(cempty[0], std::vector<BasicOpen>{BasicOpen::empty()});

  // flag drops the trivial coverings
  CoveringOptions bare;
  bare.include_trivial = false;
  EXPECT_EQ(coverings(g1, BasicOpen::make(g1, pf), bare).size(), 0u);
  EXPECT_EQ(coverings(g1, BasicOpen::make(g1, v1), bare).size(), 1u);
}

TEST(Coverings, UnionOfPiecesExhaustsEveryLongerLevel) {
  // The CK3 identity read extensionally: beyond level |mu| the pieces of a
  // covering of (mu, F) reach exactly the members of (mu, F).  At level |mu|
  // itself the path mu separates them; that gap is the point of the coverage.
  for (const Graph& g : {make_g1(), make_g2(), make_g3()}) {
    for (const auto& a : all_basics(g, 2, 2, 2)) {
      if (a.is_empty()) continue;
      const std::size_t mu_len = a.mu().length();
      auto longer = [&](const BasicOpen& b, std::size_t cap) {
        std::vector<std::string> keys;
        for (const auto& x : extensional_oracle(g, b, cap, 2))
          if (x.infinite() || *x.length() > mu_len)
            keys.push_back(render(g, x));
        std::sort(keys.begin(), keys.end());
        return keys;
      };
      for (const auto& s : coverings(g, a)) {
        for (std::size_t cap = mu_len + 1; cap <= 5; ++cap) {
          const auto target = longer(a, cap);
          std::vector<std::string> got;
          for (const auto& b : s) {
            auto part = longer(b, cap);
            got.insert(got.end(), part.begin(), part.end());
          }
          std::sort(got.begin(), got.end());
          got.erase(std::unique(got.begin(), got.end()), got.end());
          EXPECT_EQ(got, target) << render(g, a) << " at cap " << cap;
        }
      }
    }
  }
}

TEST(Oracle, ExamplesWithBundleCap) {
  const Graph g1 = make_g1();
  EXPECT_TRUE(extensional_oracle(g1, BasicOpen::empty(), 3, 2).empty());

  const auto v1_keys =
      oracle_keys(g1, BasicOpen::make(g1, Path::vertex(g1, 0)), 3, 2);
  EXPECT_EQ(v1_keys, (std::vector<std::string>{"e", "e.f", "v1"}));

  const Graph g2 = make_g2();
  const std::uint32_t cap = 4;
  const auto a = BasicOpen::make(g2, Path::vertex(g2, 0),
                                 {bundle_member(g2, "B", 0)});
  std::vector<std::string> finite, lassos;
  for (const auto& x : extensional_oracle(g2, a, 1, cap))
    (x.infinite() ? lassos : finite).push_back(render(g2, x));
  std::vector<std::string> expect_finite{"v"};
  std::vector<std::string> expect_lassos;
  for (std::uint32_t i = 1; i < cap; ++i) {
    expect_finite.push_back("B[" + std::to_string(i) + "]");
    expect_lassos.push_back("v;B[" + std::to_string(i) + "]");
  }
  std::sort(finite.begin(), finite.end());
  std::sort(expect_finite.begin(), expect_finite.end());
  EXPECT_EQ(finite, expect_finite);
  std::sort(lassos.begin(), lassos.end());
  std::sort(expect_lassos.begin(), expect_lassos.end());
  EXPECT_EQ(lassos, expect_lassos);
}

}  // namespace
}  // namespace framepath
