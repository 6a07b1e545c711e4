#include "pegsol/invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pegsol {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct MaskGraph {
  int n = 0;
  std::uint64_t all = 0;
  std::vector<std::uint64_t> nbr;

  explicit MaskGraph(const Graph& g, int cap) : n(g.vertex_count()) {
    if (n > cap)
      throw std::invalid_argument("graph exceeds the exact-search cap of " +
                                  std::to_string(cap) + " vertices");
    if (n > 64) throw std::invalid_argument("graph exceeds 64 vertices");
    all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    nbr.resize(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.neighbor_bits(v);
  }
};

// Upper bound on the independent vertices inside `mask`: size of a greedy
// clique cover.
int clique_cover_bound(const MaskGraph& mg, std::uint64_t mask) {
  int cliques = 0;
  while (mask) {
    int v = std::countr_zero(mask);
    std::uint64_t clique = bit(v);
    std::uint64_t common = mask & mg.nbr[v];
    while (common) {
      int u = std::countr_zero(common);
      clique |= bit(u);
      common &= mg.nbr[u];
    }
    mask &= ~clique;
    ++cliques;
  }
  return cliques;
}

struct AlphaSearch {
  const MaskGraph& mg;
  int best = 0;

  void run(std::uint64_t candidates, int size) {
    if (size + std::popcount(candidates) <= best) return;
    if (!candidates) {
      best = std::max(best, size);
      return;
    }
    if (size + clique_cover_bound(mg, candidates) <= best) return;
    // branch on the candidate with most candidate neighbors
    int pick = -1, pick_deg = -1;
    for (std::uint64_t b = candidates; b; b &= b - 1) {
      int v = std::countr_zero(b);
      int d = std::popcount(mg.nbr[v] & candidates);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    run((candidates & ~mg.nbr[pick]) & ~bit(pick), size + 1);
    run(candidates & ~bit(pick), size);
  }
};

}  // namespace

bool is_independent_set(const Graph& g, std::uint64_t vertices) {
  for (std::uint64_t b = vertices; b; b &= b - 1) {
    int v = std::countr_zero(b);
    if (g.neighbor_bits(v) & vertices) return false;
  }
  return true;
}

int max_independent_set_size(const Graph& g, int cap) {
  MaskGraph mg(g, cap);
  AlphaSearch search{mg};
  search.run(mg.all, 0);
  return search.best;
}

void for_each_independent_set(const Graph& g, int k,
                              const std::function<bool(std::uint64_t)>& visit) {
  int n = g.vertex_count();
  if (n > 64) throw std::invalid_argument("graph exceeds 64 vertices");
  if (k < 0 || k > n) return;
  if (k == 0) {
    visit(0);
    return;
  }
  std::vector<std::uint64_t> nbr(n);
  for (int v = 0; v < n; ++v) nbr[v] = g.neighbor_bits(v);

  // chosen vertices are all below `from`; candidates excludes their neighbors
  auto rec = [&](auto&& self, int from, std::uint64_t chosen, int need,
                 std::uint64_t candidates) -> bool {
    if (need == 0) return visit(chosen);
    for (int v = from; v + need <= n; ++v) {
      if (!(candidates & bit(v))) continue;
      if (n - v < need) break;
      if (self(self, v + 1, chosen | bit(v), need - 1, candidates & ~nbr[v]))
        return true;
    }
    return false;
  };
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  rec(rec, 0, 0, k, all);
}

IndependenceResult independence_number(const Graph& g, int cap) {
  IndependenceResult r;
  r.alpha = max_independent_set_size(g, cap);
  int n = g.vertex_count();
  for_each_independent_set(g, r.alpha, [&](std::uint64_t s) {
    r.maximum_sets.push_back(VertexSet::from_bits(n, s));
    return false;
  });
  return r;
}

namespace {

bool k_colorable(const MaskGraph& mg, const std::vector<int>& order, int k) {
  std::vector<int> color(mg.n, -1);
  // assign colors along `order`; new colors introduced in increasing order
  auto rec = [&](auto&& self, int idx, int used) -> bool {
    if (idx == mg.n) return true;
    int v = order[idx];
    std::uint64_t nb = mg.nbr[v];
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (std::uint64_t b = nb; b; b &= b - 1) {
        if (color[std::countr_zero(b)] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[v] = c;
      if (self(self, idx + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace

int chromatic_number(const Graph& g, int cap) {
  MaskGraph mg(g, cap);
  if (mg.n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  std::vector<int> order(mg.n);
  for (int v = 0; v < mg.n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = 2; k <= mg.n; ++k)
    if (k_colorable(mg, order, k)) return k;
  return mg.n;
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int found = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v).elements())
      if (!seen[u]) {
        seen[u] = 1;
        ++found;
        stack.push_back(u);
      }
  }
  return found == n;
}

namespace {

std::optional<std::pair<VertexSet, VertexSet>> find_bipartition(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int u : g.neighbors(v).elements()) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet a(n), b(n);
  for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).set(v);
  if (b.count() > a.count()) std::swap(a, b);
  return std::make_pair(a, b);
}

std::optional<std::vector<int>> find_ham_path(const Graph& g) {
  int n = g.vertex_count();
  if (n == 1) return std::vector<int>{0};
  std::vector<std::uint64_t> nbr(n);
  for (int v = 0; v < n; ++v) nbr[v] = g.neighbor_bits(v);
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // ends[mask] = endpoints of paths spanning exactly `mask`
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) ends[std::uint64_t{1} << v] = 1u << v;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    if (!e) continue;
    for (std::uint32_t b = e; b; b &= b - 1) {
      int v = std::countr_zero(b);
      std::uint64_t ext = nbr[v] & ~mask;
      for (std::uint64_t x = ext; x; x &= x - 1) {
        int u = std::countr_zero(x);
        ends[mask | (std::uint64_t{1} << u)] |= 1u << u;
      }
    }
  }
  if (!ends[full]) return std::nullopt;
  // walk the predecessor chain from the smallest endpoint; the walk itself
  // is a Hamiltonian path, deterministic by always taking smallest choices
  std::vector<int> path;
  std::uint64_t mask = full;
  int v = std::countr_zero(ends[full]);
  while (true) {
    path.push_back(v);
    mask &= ~(std::uint64_t{1} << v);
    if (!mask) break;
    std::uint32_t prev = ends[mask] & std::uint32_t(nbr[v] & mask);
    v = std::countr_zero(prev);  // nonzero by construction of ends
  }
  return path;
}

}  // namespace

StructureChecks structure_checks(const Graph& g, int ham_cap) {
  StructureChecks r;
  r.connected = is_connected(g);
  r.bipartition = find_bipartition(g);
  int n = g.vertex_count();
  if (n <= ham_cap && n <= 24) {  // hard limit: the subset table is 2^n entries
    r.ham_path_searched = true;
    if (r.connected) r.ham_path = find_ham_path(g);
  }
  return r;
}

}  // namespace pegsol
