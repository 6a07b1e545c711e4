#include "pegsol/graph6.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pegsol {

namespace {

constexpr int kBias = 63;

int checked_byte(std::string_view line, std::size_t i) {
  if (i >= line.size()) throw std::invalid_argument("graph6: truncated input");
  unsigned char c = line[i];
  if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range 63..126");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw std::invalid_argument("graph6: empty line");
  std::size_t pos = 0;
  long long n;
  if ((unsigned char)line[0] != 126) {
    n = checked_byte(line, pos++);
  } else {
    ++pos;
    if (pos < line.size() && (unsigned char)line[pos] == 126)
      throw std::invalid_argument("graph6: sizes of 2^18 and above unsupported");
    long long a = checked_byte(line, pos++);
    long long b = checked_byte(line, pos++);
    long long c = checked_byte(line, pos++);
    n = (a << 12) | (b << 6) | c;
    if (n < 63) throw std::invalid_argument("graph6: malformed length prefix (long form below 63)");
  }
  long long bits = n * (n - 1) / 2;
  std::size_t groups = std::size_t((bits + 5) / 6);
  if (line.size() - pos != groups)
    throw std::invalid_argument(line.size() - pos > groups ? "graph6: trailing garbage"
                                                           : "graph6: truncated input");
  Graph g{int(n)};
  long long bit = 0;
  int cur = 0, have = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      if (have == 0) {
        cur = checked_byte(line, pos++);
        have = 6;
      }
      if (cur & (1 << (have - 1))) g.add_edge(row, col);
      --have;
    }
  }
  // any leftover bits in the final group must be zero padding
  if (have > 0 && (cur & ((1 << have) - 1)) != 0)
    throw std::invalid_argument("graph6: nonzero padding bits");
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out.push_back(char(n + kBias));
  } else if (n < (1 << 18)) {
    out.push_back(char(126));
    out.push_back(char(((n >> 12) & 63) + kBias));
    out.push_back(char(((n >> 6) & 63) + kBias));
    out.push_back(char((n & 63) + kBias));
  } else {
    throw std::invalid_argument("graph6: vertex count too large to encode");
  }
  int cur = 0, have = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      cur = (cur << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++have == 6) {
        out.push_back(char(cur + kBias));
        cur = have = 0;
      }
    }
  }
  if (have > 0) out.push_back(char((cur << (6 - have)) + kBias));
  return out;
}

namespace {

// Pair index for the upper triangle, column-major as in graph6:
// (row, col) with row < col maps to col*(col-1)/2 + row.
int pair_index(int row, int col) { return col * (col - 1) / 2 + row; }

using Mask = std::uint32_t;  // up to C(7,2) = 21 bits

struct PermTables {
  // For each permutation of n vertices, a pair-index remap table.
  std::vector<std::vector<std::uint8_t>> tables;
};

const PermTables& perm_tables(int n) {
  static std::mutex mu;
  static std::map<int, PermTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PermTables t;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int pairs = n * (n - 1) / 2;
  do {
    std::vector<std::uint8_t> tab(pairs);
    for (int col = 1; col < n; ++col)
      for (int row = 0; row < col; ++row) {
        int a = perm[row], b = perm[col];
        if (a > b) std::swap(a, b);
        tab[pair_index(row, col)] = std::uint8_t(pair_index(a, b));
      }
    t.tables.push_back(std::move(tab));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cache.emplace(n, std::move(t)).first->second;
}

Mask canonical_mask(int n, Mask mask) {
  const auto& perms = perm_tables(n).tables;
  Mask best = ~Mask{0};
  for (const auto& tab : perms) {
    Mask img = 0;
    for (Mask b = mask; b;) {
      int i = std::countr_zero(b);
      b &= b - 1;
      img |= Mask{1} << tab[i];
    }
    if (img < best) best = img;
  }
  return best;
}

bool mask_connected(int n, Mask mask) {
  if (n == 1) return true;
  std::vector<std::uint8_t> adj(std::size_t(n) * n, 0);
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row)
      if (mask & (Mask{1} << pair_index(row, col)))
        adj[row * n + col] = adj[col * n + row] = 1;
  std::uint32_t seen = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u)
      if (adj[v * n + u] && !(seen & (1u << u))) {
        seen |= 1u << u;
        stack.push_back(u);
      }
  }
  return std::popcount(seen) == n;
}

Graph mask_to_graph(int n, Mask mask) {
  Graph g(n);
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row)
      if (mask & (Mask{1} << pair_index(row, col))) g.add_edge(row, col);
  return g;
}

// Isomorphism-free enumeration by vertex augmentation: every n-vertex graph
// is some (n-1)-vertex representative plus one new vertex attached to a
// subset, deduplicated by the minimum adjacency mask over all relabelings.
const std::vector<std::vector<Mask>>& levels_up_to(int n) {
  static std::mutex mu;
  static std::vector<std::vector<Mask>> levels;  // levels[k] = canonical masks on k+1 vertices
  std::lock_guard<std::mutex> lock(mu);
  if (levels.empty()) {
    levels.reserve(7);  // references into `levels` must stay valid
    levels.push_back({Mask{0}});  // the 1-vertex graph
  }
  while (int(levels.size()) < n) {
    int m = int(levels.size()) + 1;  // building m-vertex graphs
    std::vector<Mask> next;
    for (Mask parent : levels.back()) {
      for (std::uint32_t sub = 0; sub < (1u << (m - 1)); ++sub) {
        Mask mask = parent;
        for (std::uint32_t s = sub; s;) {
          int v = std::countr_zero(s);
          s &= s - 1;
          mask |= Mask{1} << pair_index(v, m - 1);
        }
        next.push_back(canonical_mask(m, mask));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

const std::vector<Graph>& enumeration(int n, bool connected_only) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("enumeration supports 1 <= n <= 7");
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::vector<Graph>> cache;
  const auto& masks = levels_up_to(n)[n - 1];
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, connected_only);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Graph> out;
  for (Mask m : masks) {
    if (connected_only && !mask_connected(n, m)) continue;
    out.push_back(mask_to_graph(n, m));
  }
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

const std::vector<Graph>& enumerate_connected(int n) { return enumeration(n, true); }

const std::vector<Graph>& enumerate_graphs(int n) { return enumeration(n, false); }

}  // namespace pegsol
