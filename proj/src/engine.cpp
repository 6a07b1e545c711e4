#include "pegsol/engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "pegsol/invariants.hpp"

namespace pegsol {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct Board {
  int n = 0;
  std::uint64_t all = 0;
  std::vector<std::uint64_t> nbr;

  Board(const Graph& g, int cap, bool need_connected) : n(g.vertex_count()) {
    if (n > cap)
      throw std::invalid_argument("graph exceeds the search cap of " +
                                  std::to_string(cap) + " vertices");
    if (n > 64) throw std::invalid_argument("engine requires at most 64 vertices");
    if (need_connected && !is_connected(g))
      throw std::invalid_argument("peg solitaire requires a connected graph");
    all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    nbr.resize(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.neighbor_bits(v);
  }

  void check_config(Config c) const {
    if (c.pegs & ~all)
      throw std::invalid_argument("configuration uses vertices outside the graph");
  }
};

// Visit legal jumps in lexicographic (from, over, to) order; the visitor
// returns true to stop. Returns true if any jump was visited.
template <class F>
bool for_each_jump(const Board& b, std::uint64_t pegs, F&& f) {
  std::uint64_t holes = b.all & ~pegs;
  bool any = false;
  for (std::uint64_t xs = pegs; xs; xs &= xs - 1) {
    int x = std::countr_zero(xs);
    for (std::uint64_t ys = b.nbr[x] & pegs; ys; ys &= ys - 1) {
      int y = std::countr_zero(ys);
      for (std::uint64_t zs = b.nbr[y] & holes; zs; zs &= zs - 1) {
        int z = std::countr_zero(zs);
        any = true;
        if (f(x, y, z)) return true;
      }
    }
  }
  return any;
}

std::uint64_t next_pegs(std::uint64_t pegs, int x, int y, int z) {
  return (pegs & ~bit(x) & ~bit(y)) | bit(z);
}

int encode_jump(const Board& b, int x, int y, int z) {
  return (x * b.n + y) * b.n + z;
}

Jump decode_jump(const Board& b, int code) {
  return Jump{code / (b.n * b.n), (code / b.n) % b.n, code % b.n};
}

// Memoized search for "can this configuration be reduced to one peg lying
// in `targets`". For solvable configurations the memo stores the first jump
// of the lexicographically first solving sequence.
struct TargetSearch {
  const Board& b;
  std::uint64_t targets;
  std::unordered_map<std::uint64_t, int> memo;  // pegs -> jump code, -1 = unsolvable

  TargetSearch(const Board& board, std::uint64_t t) : b(board), targets(t) {
    memo.reserve(1 << 12);
  }

  bool solvable(std::uint64_t pegs) {
    if (std::popcount(pegs) == 1) return (pegs & targets) != 0;
    if (pegs == 0) return false;
    auto it = memo.find(pegs);
    if (it != memo.end()) return it->second >= 0;
    int found = -1;
    for_each_jump(b, pegs, [&](int x, int y, int z) {
      if (solvable(next_pegs(pegs, x, y, z))) {
        found = encode_jump(b, x, y, z);
        return true;
      }
      return false;
    });
    memo.emplace(pegs, found);
    return found >= 0;
  }

  JumpSequence sequence(std::uint64_t pegs) const {
    JumpSequence seq;
    while (std::popcount(pegs) > 1) {
      Jump j = decode_jump(b, memo.at(pegs));
      seq.push_back(j);
      pegs = next_pegs(pegs, j.from, j.over, j.to);
    }
    return seq;
  }
};

// Set of vertices on which a lone final peg can be left.
struct TargetsMaskSearch {
  const Board& b;
  JumpOrder order;
  std::unordered_map<std::uint64_t, std::uint64_t> memo;

  std::uint64_t targets(std::uint64_t pegs) {
    if (std::popcount(pegs) == 1) return pegs;
    if (pegs == 0) return 0;
    auto it = memo.find(pegs);
    if (it != memo.end()) return it->second;
    std::uint64_t r = 0;
    if (order == JumpOrder::lexicographic) {
      for_each_jump(b, pegs, [&](int x, int y, int z) {
        r |= targets(next_pegs(pegs, x, y, z));
        return false;
      });
    } else {
      std::vector<std::array<int, 3>> jumps;
      for_each_jump(b, pegs, [&](int x, int y, int z) {
        jumps.push_back({x, y, z});
        return false;
      });
      for (auto it2 = jumps.rbegin(); it2 != jumps.rend(); ++it2)
        r |= targets(next_pegs(pegs, (*it2)[0], (*it2)[1], (*it2)[2]));
    }
    memo.emplace(pegs, r);
    return r;
  }
};

// Best reachable dead-state peg count, with the first jump toward it.
struct ForwardSearch {
  const Board& b;
  JumpOrder order;
  struct Entry {
    int best = -1;
    int via = -1;  // -1: this configuration is already dead
  };
  std::unordered_map<std::uint64_t, Entry> memo;

  Entry best_dead(std::uint64_t pegs) {
    auto it = memo.find(pegs);
    if (it != memo.end()) return it->second;
    Entry e;
    std::vector<std::array<int, 3>> jumps;
    bool any = for_each_jump(b, pegs, [&](int x, int y, int z) {
      jumps.push_back({x, y, z});
      return false;
    });
    if (!any) {
      e.best = std::popcount(pegs);
      e.via = -1;
    } else {
      if (order == JumpOrder::reverse_lexicographic)
        std::reverse(jumps.begin(), jumps.end());
      for (auto [x, y, z] : jumps) {
        Entry child = best_dead(next_pegs(pegs, x, y, z));
        if (child.best > e.best) {
          e.best = child.best;
          e.via = encode_jump(b, x, y, z);
        }
      }
    }
    memo.emplace(pegs, e);
    return e;
  }
};

}  // namespace

int Config::peg_count() const { return std::popcount(pegs); }

Config Config::single_hole(int n, int hole) {
  if (n < 1 || n > 64) throw std::invalid_argument("Config: bad vertex count");
  if (hole < 0 || hole >= n) throw std::invalid_argument("Config: hole out of range");
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  return Config{all & ~bit(hole)};
}

Config Config::with_holes(int n, std::uint64_t holes) {
  if (n < 1 || n > 64) throw std::invalid_argument("Config: bad vertex count");
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  if (holes & ~all) throw std::invalid_argument("Config: holes outside the graph");
  return Config{all & ~holes};
}

Config complement(const Graph& g, Config c) {
  Board b(g, 64, false);
  b.check_config(c);
  return Config{b.all & ~c.pegs};
}

bool is_legal(const Graph& g, Config c, Jump j) {
  int n = g.vertex_count();
  if (j.from < 0 || j.from >= n || j.over < 0 || j.over >= n || j.to < 0 || j.to >= n)
    return false;
  return c.has_peg(j.from) && c.has_peg(j.over) && !c.has_peg(j.to) &&
         g.has_edge(j.from, j.over) && g.has_edge(j.over, j.to) && j.from != j.to;
}

std::vector<Jump> legal_jumps(const Graph& g, Config c) {
  Board b(g, 64, false);
  b.check_config(c);
  std::vector<Jump> out;
  for_each_jump(b, c.pegs, [&](int x, int y, int z) {
    out.push_back(Jump{x, y, z});
    return false;
  });
  return out;
}

Config apply_jump(const Graph& g, Config c, Jump j) {
  if (!is_legal(g, c, j)) {
    std::string why;
    int n = g.vertex_count();
    if (j.from < 0 || j.from >= n || j.over < 0 || j.over >= n || j.to < 0 || j.to >= n)
      why = "vertex out of range";
    else if (!c.has_peg(j.from))
      why = "no peg at the jumping vertex";
    else if (!c.has_peg(j.over))
      why = "no peg to jump over";
    else if (c.has_peg(j.to))
      why = "landing vertex is not a hole";
    else if (!g.has_edge(j.from, j.over) || !g.has_edge(j.over, j.to))
      why = "jump is not along a path of two edges";
    else
      why = "jump lands on its own origin";
    throw std::invalid_argument("illegal jump " + std::to_string(j.from) + "," +
                                std::to_string(j.over) + "," + std::to_string(j.to) +
                                ": " + why);
  }
  return Config{next_pegs(c.pegs, j.from, j.over, j.to)};
}

std::optional<JumpSequence> reachable_to_single_peg(const Graph& g, Config c, int cap) {
  Board b(g, cap, false);
  b.check_config(c);
  TargetSearch search(b, b.all);
  if (!search.solvable(c.pegs)) return std::nullopt;
  return search.sequence(c.pegs);
}

std::optional<JumpSequence> solve_to_targets(const Graph& g, Config c,
                                             std::uint64_t targets, int cap) {
  Board b(g, cap, false);
  b.check_config(c);
  TargetSearch search(b, targets & b.all);
  if (!search.solvable(c.pegs)) return std::nullopt;
  return search.sequence(c.pegs);
}

std::uint64_t reachable_single_peg_targets(const Graph& g, Config c, int cap,
                                           JumpOrder order) {
  Board b(g, cap, false);
  b.check_config(c);
  TargetsMaskSearch search{b, order, {}};
  return search.targets(c.pegs);
}

SolvabilityProfile solvability_profile(const Graph& g, int cap) {
  Board b(g, cap, true);
  SolvabilityProfile p;
  // a game needs at least one jump, so graphs on one or two vertices are
  // never solvable (the single-hole start on K_2 has no legal move)
  if (b.n < 3) return p;
  TargetSearch any(b, b.all);
  int solvable_starts = 0;
  for (int v = 0; v < b.n; ++v)
    if (any.solvable(b.all & ~bit(v))) ++solvable_starts;
  p.solvable = solvable_starts > 0;
  p.freely_solvable = solvable_starts == b.n;
  if (p.freely_solvable) {
    p.freely_nbhd_solvable = true;
    for (int v = 0; v < b.n && p.freely_nbhd_solvable; ++v) {
      std::uint64_t nbhd = b.nbr[v] | bit(v);
      TargetSearch t(b, nbhd);
      p.freely_nbhd_solvable = t.solvable(b.all & ~bit(v));
    }
  }
  return p;
}

FoolsReport fools_number(const Graph& g, int cap) {
  Board b(g, cap, true);
  FoolsReport r;
  r.terminal = VertexSet(b.n);
  if (b.n == 1) {
    // a lone vertex starts with zero pegs; the empty terminal has size 0
    r.witness_hole = 0;
    return r;
  }
  int alpha = max_independent_set_size(g, cap);
  TargetSearch search(b, b.all);
  for (int s = std::min(alpha, b.n - 1); s >= 1; --s) {
    std::uint64_t found = 0;
    bool have = false;
    for_each_independent_set(g, s, [&](std::uint64_t t) {
      if (search.solvable(b.all & ~t)) {
        found = t;
        have = true;
        return true;
      }
      return false;
    });
    if (!have) continue;
    std::uint64_t pegs = b.all & ~found;
    JumpSequence dual = search.sequence(pegs);
    for (const Jump& j : dual) pegs = next_pegs(pegs, j.from, j.over, j.to);
    r.f_value = s;
    r.witness_hole = std::countr_zero(pegs);  // the lone final peg
    r.terminal = VertexSet::from_bits(b.n, found);
    // play the dual game backwards: same triples, reversed order
    r.witness_sequence.assign(dual.rbegin(), dual.rend());
    return r;
  }
  throw std::logic_error("fools_number: no terminal state found on a connected graph");
}

FoolsReport fools_number_forward(const Graph& g, int cap, JumpOrder order) {
  Board b(g, cap, true);
  FoolsReport r;
  r.terminal = VertexSet(b.n);
  if (b.n == 1) {
    r.witness_hole = 0;
    return r;
  }
  ForwardSearch search{b, order, {}};
  int best = -1, best_hole = -1;
  for (int v = 0; v < b.n; ++v) {
    auto e = search.best_dead(b.all & ~bit(v));
    if (e.best > best) {
      best = e.best;
      best_hole = v;
    }
  }
  r.f_value = best;
  r.witness_hole = best_hole;
  std::uint64_t pegs = b.all & ~bit(best_hole);
  while (true) {
    auto e = search.best_dead(pegs);
    if (e.via < 0) break;
    Jump j = decode_jump(b, e.via);
    r.witness_sequence.push_back(j);
    pegs = next_pegs(pegs, j.from, j.over, j.to);
  }
  r.terminal = VertexSet::from_bits(b.n, pegs);
  return r;
}

UpperBoundCheck upper_bound_check(const Graph& g, int cap) {
  UpperBoundCheck r;
  IndependenceResult ind = independence_number(g, cap);
  r.alpha = ind.alpha;
  int n = g.vertex_count();
  if (ind.alpha > n - 2) return r;
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (const VertexSet& a : ind.maximum_sets)
    if (!is_independent_set(g, all & ~a.low64())) return r;
  r.prop2_applies = true;
  return r;
}

}  // namespace pegsol
