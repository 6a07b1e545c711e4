#pragma once

// Shared helpers for the test suites. The brute-force routines here are
// deliberately independent of the library's search code: they enumerate
// subsets or permutations directly and serve as oracles.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "pegsol/graph.hpp"

namespace pegsol::testutil {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Independence check straight from the edge list.
inline bool independent_by_edges(const Graph& g, std::uint64_t set) {
  for (auto [u, v] : g.edges())
    if ((set & bit(u)) && (set & bit(v))) return false;
  return true;
}

// Exhaustive alpha over all 2^n subsets.
inline int brute_alpha(const Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (independent_by_edges(g, s)) best = std::max(best, std::popcount(s));
  return best;
}

inline std::vector<std::uint64_t> brute_maximum_independent_sets(const Graph& g) {
  int n = g.vertex_count();
  int best = brute_alpha(g);
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (std::popcount(s) == best && independent_by_edges(g, s)) out.push_back(s);
  return out;
}

// Backtracking isomorphism test, vertex-by-vertex with adjacency
// consistency checks. Fine for the small graphs used in tests.
inline bool isomorphic(const Graph& a, const Graph& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1), used(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool okay = true;
      for (int u = 0; u < v; ++u)
        if (a.has_edge(u, v) != b.has_edge(map[u], w)) {
          okay = false;
          break;
        }
      if (!okay) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

// Erdos–Renyi-style random graph from a seeded engine.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  // random spanning tree first, then extra edges
  Graph g(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    g.add_edge(order[i], order[pick(rng)]);
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace pegsol::testutil
