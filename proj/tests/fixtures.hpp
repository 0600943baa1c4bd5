// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared test graphs and the deterministic random corpus.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framepath/graph.hpp"

namespace framepath::testing {

// v1 --e--> v2 --f--> v3 (composition order: r(e)=v1, d(e)=v2)
inline Graph make_g1() {
  Graph g;
  g.add_vertex("v1");
  g.add_vertex("v2");
  g.add_vertex("v3");
  g.add_edge("e", "v1", "v2");
  g.add_edge("f", "v2", "v3");
  return g;
}

// One vertex carrying a countably infinite loop bundle.
inline Graph make_g2() {
  Graph g;
  g.add_vertex("v");
  g.add_bundle("B", "v", "v");
  return g;
}

// One vertex with a single plain loop.
inline Graph make_g3() {
  Graph g;
  g.add_vertex("v");
  g.add_edge("e", "v", "v");
  return g;
}

// splitmix64; self-contained so the corpus is identical on every platform
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint32_t below(std::uint32_t n) {
    return n ? static_cast<std::uint32_t>(next() % n) : 0;
  }
};

struct RandomGraphOptions {
  std::uint32_t max_vertices = 8;
  std::uint32_t max_edges = 15;
  std::uint32_t max_bundles = 2;
};

inline Graph random_graph(Rng& rng, RandomGraphOptions opts = {}) {
  Graph g;
  const std::uint32_t nv = 1 + rng.below(opts.max_vertices);
  for (std::uint32_t i = 0; i < nv; ++i)
    g.add_vertex("v" + std::to_string(i + 1));
  const std::uint32_t ne = rng.below(opts.max_edges + 1);
  for (std::uint32_t i = 0; i < ne; ++i) {
    const auto r = "v" + std::to_string(1 + rng.below(nv));
    const auto d = "v" + std::to_string(1 + rng.below(nv));
    g.add_edge("e" + std::to_string(i + 1), r, d);
  }
  const std::uint32_t nb = rng.below(opts.max_bundles + 1);
  for (std::uint32_t i = 0; i < nb; ++i) {
    const auto r = "v" + std::to_string(1 + rng.below(nv));
    const auto d = "v" + std::to_string(1 + rng.below(nv));
    g.add_bundle("B" + std::to_string(i + 1), r, d);
  }
  return g;
}

// Number of paths up to max_len with the given bundle cap, abandoning the
// count once it passes `limit`.
inline std::size_t bounded_path_count(const Graph& g, std::size_t max_len,
                                      std::uint32_t bundle_cap,
                                      std::size_t limit) {
  std::vector<std::size_t> frontier(g.vertex_count(), 1);  // by domain vertex
  std::size_t total = g.vertex_count();
  for (std::size_t len = 1; len <= max_len && total <= limit; ++len) {
    std::vector<std::size_t> next(g.vertex_count(), 0);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      if (!frontier[v]) continue;
      for (std::uint32_t e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).r == v) next[g.edge(e).d] += frontier[v];
      for (std::uint32_t b = 0; b < g.bundle_count(); ++b)
        if (g.bundle(b).r == v) next[g.bundle(b).d] += frontier[v] * bundle_cap;
    }
    frontier = std::move(next);
    for (auto c : frontier) total += c;
  }
  return total;
}

// Estimated number of (prefix, cycle) pairs with |prefix|+|cycle| <= desc,
// before canonical deduplication; walk-count matrix powers.
inline std::size_t lasso_pair_estimate(const Graph& g, std::size_t desc,
                                       std::uint32_t bundle_cap) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<std::vector<std::size_t>> step(n, std::vector<std::size_t>(n, 0));
  for (std::uint32_t e = 0; e < g.edge_count(); ++e)
    step[g.edge(e).r][g.edge(e).d] += 1;
  for (std::uint32_t b = 0; b < g.bundle_count(); ++b)
    step[g.bundle(b).r][g.bundle(b).d] += bundle_cap;
  std::vector<std::vector<std::vector<std::size_t>>> walks{
      std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n, 0))};
  for (std::size_t v = 0; v < n; ++v) walks[0][v][v] = 1;
  for (std::size_t l = 1; l <= desc; ++l) {
    auto next = std::vector<std::vector<std::size_t>>(
        n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          next[a][c] += walks[l - 1][a][b] * step[b][c];
    walks.push_back(std::move(next));
  }
  std::size_t pairs = 0;
  for (std::size_t lc = 1; lc <= desc; ++lc)
    for (std::size_t lp = 0; lp + lc <= desc; ++lp)
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t prefixes = 0;
        for (std::size_t u = 0; u < n; ++u) prefixes += walks[lp][u][v];
        pairs += prefixes * walks[lc][v][v];
      }
  return pairs;
}

inline bool desk_scale(const Graph& g, std::size_t len, std::uint32_t cap,
                       std::size_t path_limit, std::size_t pair_limit) {
  return bounded_path_count(g, len, cap, path_limit) <= path_limit &&
         lasso_pair_estimate(g, len, cap) <= pair_limit;
}

// The fixed corpus for the theorem suites: twenty seeded random graphs plus
// the three hand fixtures.  Draws whose truncation-6 universes would not be
// enumerable at desk scale are re-rolled; the published time budgets of the
// exhaustive sweeps presuppose that.
inline std::vector<Graph> theorem_corpus() {
  std::vector<Graph> out;
  Rng rng(0x5eedf00d);
  while (out.size() < 20) {
    Graph g = random_graph(rng);
    if (desk_scale(g, 6, 2, 1200, 30000)) out.push_back(std::move(g));
  }
  out.push_back(make_g1());
  out.push_back(make_g2());
  out.push_back(make_g3());
  return out;
}

// Small sparse random graphs whose truncation-7 universes stay desk-sized;
// used by the exhaustive basis and patch sweeps.
inline std::vector<Graph> small_corpus(std::size_t count) {
  std::vector<Graph> out;
  Rng rng(0xabc123ULL);
  RandomGraphOptions opts;
  opts.max_vertices = 6;
  opts.max_edges = 8;
  opts.max_bundles = 1;
  while (out.size() < count) {
    Graph g = random_graph(rng, opts);
    if (desk_scale(g, 7, 2, 1500, 20000)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace framepath::testing
