#include "pegsol/strategies.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <json.hpp>

#include "pegsol/graph6.hpp"
#include "pegsol/invariants.hpp"

namespace pegsol {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t all_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1;
}

// Tracks the configuration while a strategy emits jumps, failing loudly if
// a generated jump is illegal (a strategy bug, not a user error).
struct Builder {
  const Graph& g;
  Config c;
  JumpSequence seq;

  Builder(const Graph& graph, Config start) : g(graph), c(start) {}

  void play(int from, int over, int to) {
    Jump j{from, over, to};
    if (!is_legal(g, c, j))
      throw std::logic_error("strategy produced an illegal jump " +
                             std::to_string(from) + "," + std::to_string(over) + "," +
                             std::to_string(to));
    c = apply_jump(g, c, j);
    seq.push_back(j);
  }
};

int smallest(std::uint64_t bits) { return std::countr_zero(bits); }

int second_smallest(std::uint64_t bits) {
  return std::countr_zero(bits & (bits - 1));
}

}  // namespace

Config replay(const Graph& g, Config start, const JumpSequence& seq) {
  Config c = start;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    try {
      c = apply_jump(g, c, seq[i]);
    } catch (const std::invalid_argument& e) {
      throw ReplayError(int(i), e.what());
    }
  }
  return c;
}

bool validate_certificate(const StrategyCertificate& cert, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  int n = cert.graph.vertex_count();
  if (n < 1 || n > 64) return fail("graph size out of engine range");
  std::uint64_t all = all_mask(n);
  if (cert.start.pegs & ~all) return fail("start configuration outside the graph");
  std::uint64_t holes = all & ~cert.start.pegs;
  if (!is_independent_set(cert.graph, holes))
    return fail("claimed terminal state is not independent");
  if (cert.claimed_terminal_size != std::popcount(holes))
    return fail("claimed size does not match the start holes");
  Config finish;
  try {
    finish = replay(cert.graph, cert.start, cert.jumps);
  } catch (const ReplayError& e) {
    return fail(e.what());
  }
  if (finish != cert.end) return fail("replay does not reach the stated end configuration");
  if (finish.peg_count() != 1) return fail("end configuration is not a single peg");
  return true;
}

// ---------------------------------------------------------------------------
// Joins
// ---------------------------------------------------------------------------

namespace {

// Side-aware view of a join: S holds the side containing the starting
// holes, T the other side, both as lists of join vertex ids.
struct JoinSides {
  std::vector<int> s_side, t_side;
  bool s_has_edge = false, t_has_edge = false;
};

bool side_has_edge(const Graph& j, const std::vector<int>& side) {
  for (std::size_t a = 0; a < side.size(); ++a)
    for (std::size_t b = a + 1; b < side.size(); ++b)
      if (j.has_edge(side[a], side[b])) return true;
  return false;
}

}  // namespace

StrategyCertificate solve_join(const Graph& g, const Graph& h, const VertexSet& s) {
  const int gn = g.vertex_count(), hn = h.vertex_count();
  const int n = gn + hn;
  if (n > 64) throw std::invalid_argument("solve_join: join exceeds 64 vertices");
  if (s.universe() != n)
    throw std::invalid_argument("solve_join: s must range over the join's vertices");
  Graph j = join(g, h);
  std::uint64_t sbits = s.low64();
  if (sbits == 0) throw std::invalid_argument("solve_join: s must be nonempty");
  if (!is_independent_set(j, sbits))
    throw std::invalid_argument("solve_join: s is not independent in the join");

  std::uint64_t a_bits = all_mask(gn);
  std::uint64_t b_bits = all_mask(n) & ~a_bits;
  if ((sbits & a_bits) && (sbits & b_bits))
    throw std::invalid_argument("solve_join: s must lie inside one side");

  JoinSides sides;
  for (int v = 0; v < gn; ++v)
    ((sbits & a_bits) ? sides.s_side : sides.t_side).push_back(v);
  for (int v = gn; v < n; ++v)
    ((sbits & a_bits) ? sides.t_side : sides.s_side).push_back(v);
  sides.s_has_edge = side_has_edge(j, sides.s_side);
  sides.t_has_edge = side_has_edge(j, sides.t_side);

  std::uint64_t s_mask = 0, t_mask = 0;
  for (int v : sides.s_side) s_mask |= bit(v);
  for (int v : sides.t_side) t_mask |= bit(v);

  const int scount = std::popcount(sbits);
  const bool both_edgeless_big =
      !sides.s_has_edge && !sides.t_has_edge && sides.s_side.size() >= 2 &&
      sides.t_side.size() >= 2;

  if (both_edgeless_big) {
    // complete bipartite: the maximum independent set is not terminal, so
    // the holes go at all but one vertex of a largest side
    std::size_t larger = std::max(sides.s_side.size(), sides.t_side.size());
    if (sides.s_side.size() != larger || scount != int(larger) - 1)
      throw std::invalid_argument(
          "solve_join: complete bipartite case needs all but one vertex of a largest side");
  } else {
    int alpha = max_independent_set_size(j, 64);
    if (scount != alpha)
      throw std::invalid_argument("solve_join: s is not a maximum independent set");
  }

  Builder b(j, Config::with_holes(n, sbits));
  auto pegs_in = [&](std::uint64_t side) { return b.c.pegs & side; };
  auto holes_in = [&](std::uint64_t side) { return side & ~b.c.pegs; };

  if (both_edgeless_big) {
    // walk the lone S-side peg over T until T is empty
    while (pegs_in(t_mask)) {
      int x = smallest(pegs_in(s_mask));
      b.play(x, smallest(pegs_in(t_mask)), smallest(holes_in(s_mask)));
    }
  } else if (b.c.peg_count() == 1) {
    // star with the hole set at the leaves: already terminal
  } else if (sides.s_side.size() == 1) {
    // alpha = 1 with the hole on the singleton side forces T to be a
    // clique, so the whole join is a complete graph with one hole
    int k = n;
    int hole = sides.s_side[0];
    int target = k == 3 ? hole : (k == 4 && hole == 0 ? 1 : 0);
    if (k >= 4 && target == hole) target = (hole + 1) % k;
    for (const Jump& jm : kk_solve_with_target(k, hole, target))
      b.play(jm.from, jm.over, jm.to);
  } else if (sides.t_side.size() == 1) {
    // dominating vertex z: alternate a jump over z into S with a jump back
    // onto z, removing two S pegs per round
    int z = sides.t_side[0];
    while (std::popcount(pegs_in(s_mask)) >= 2) {
      int y = -1, w = -1;
      for (std::uint64_t c = pegs_in(s_mask); c; c &= c - 1) {
        int cand = std::countr_zero(c);
        std::uint64_t hn_ = j.neighbor_bits(cand) & holes_in(s_mask);
        if (hn_) {
          y = cand;
          w = smallest(hn_);
          break;
        }
      }
      if (y < 0) throw std::logic_error("solve_join: no peg with an adjacent hole");
      int x = smallest(pegs_in(s_mask) & ~bit(y));
      b.play(x, z, w);
      b.play(w, y, z);
    }
    if (std::popcount(pegs_in(s_mask)) == 1)
      b.play(smallest(pegs_in(s_mask)), z, smallest(holes_in(s_mask)));
  } else if (sides.s_has_edge) {
    // land one peg back into S, strip S down to one peg jumping T-over-S,
    // then consume T jumping S-over-T
    b.play(smallest(pegs_in(s_mask)), smallest(t_mask), smallest(holes_in(s_mask)));
    while (std::popcount(pegs_in(s_mask)) >= 2)
      b.play(smallest(pegs_in(t_mask)), smallest(pegs_in(s_mask)),
             smallest(holes_in(t_mask)));
    while (pegs_in(t_mask))
      b.play(smallest(pegs_in(s_mask)), smallest(pegs_in(t_mask)),
             smallest(holes_in(s_mask)));
  } else {
    // S edgeless (so S is all holes) and T has an edge: open with a jump
    // inside T landing in S, then consume T
    int ea = -1, eb = -1;
    for (std::size_t p = 0; p < sides.t_side.size() && ea < 0; ++p)
      for (std::size_t q = p + 1; q < sides.t_side.size(); ++q)
        if (j.has_edge(sides.t_side[p], sides.t_side[q])) {
          ea = sides.t_side[p];
          eb = sides.t_side[q];
          break;
        }
    if (ea < 0) throw std::logic_error("solve_join: expected an edge in T");
    b.play(ea, eb, smallest(holes_in(s_mask)));
    while (pegs_in(t_mask))
      b.play(smallest(pegs_in(s_mask)), smallest(pegs_in(t_mask)),
             smallest(holes_in(s_mask)));
  }

  if (b.c.peg_count() != 1)
    throw std::logic_error("solve_join: strategy did not end at a single peg");
  return StrategyCertificate{std::move(j), "join strategy", scount,
                             Config::with_holes(n, sbits), std::move(b.seq), b.c};
}

// ---------------------------------------------------------------------------
// Complete graphs
// ---------------------------------------------------------------------------

JumpSequence kk_solve_with_target(int k, int hole, int target) {
  if (k < 3) throw std::invalid_argument("kk_solve_with_target: k must be at least 3");
  if (hole < 0 || hole >= k || target < 0 || target >= k)
    throw std::invalid_argument("kk_solve_with_target: vertex out of range");
  if (k == 3 && target != hole)
    throw std::invalid_argument(
        "kk_solve_with_target: on K_3 the final peg must sit at the starting hole");
  if (k == 4 && target == hole)
    throw std::invalid_argument(
        "kk_solve_with_target: on K_4 the final peg cannot sit at the starting hole");

  Graph kk = make_complete(k);
  Builder b(kk, Config::single_hole(k, hole));

  if (k == 3) {
    int a = hole == 0 ? 1 : 0;
    int c = hole == 2 ? 1 : 2;
    b.play(a, c, hole);
  } else if (k == 4) {
    int x = -1, w = -1;
    for (int v = 0; v < 4; ++v)
      if (v != hole && v != target) (x < 0 ? x : w) = v;
    b.play(x, target, hole);
    b.play(w, hole, target);
  } else {
    int avoid;
    if (target == hole) {
      // first jump parks a peg on the hole; the second clears it again so
      // the endgame can land there
      std::uint64_t pegs = b.c.pegs;
      int a = smallest(pegs), a2 = second_smallest(pegs);
      b.play(a, a2, hole);
      int c = smallest(b.c.pegs & ~bit(hole));
      b.play(c, hole, a);
      avoid = hole;
    } else {
      int y = smallest(b.c.pegs & ~bit(target));
      b.play(target, y, hole);
      avoid = target;
    }
    while (b.c.peg_count() > 2) {
      std::uint64_t pegs = b.c.pegs;
      std::uint64_t holes = all_mask(k) & ~pegs & ~bit(avoid);
      b.play(smallest(pegs), second_smallest(pegs), smallest(holes));
    }
    b.play(smallest(b.c.pegs), second_smallest(b.c.pegs), avoid);
  }
  if (b.c.pegs != bit(target))
    throw std::logic_error("kk_solve_with_target: did not end on the target");
  return b.seq;
}

// ---------------------------------------------------------------------------
// P_2 x K_3 clearing
// ---------------------------------------------------------------------------

const Graph& p2k3_graph() {
  static const Graph g = cartesian(make_path(2), make_complete(3)).first;
  return g;
}

K3ClearResult clear_k3_pair(const Graph& host, const std::array<int, 3>& clear_tri,
                            const std::array<int, 3>& keep_tri, Config state) {
  for (int p = 0; p < 3; ++p) {
    for (int q = p + 1; q < 3; ++q) {
      if (!host.has_edge(clear_tri[p], clear_tri[q]) ||
          !host.has_edge(keep_tri[p], keep_tri[q]))
        throw std::invalid_argument("clear_k3_pair: triples are not triangles");
    }
    if (!host.has_edge(clear_tri[p], keep_tri[p]))
      throw std::invalid_argument("clear_k3_pair: triangles are not matched by position");
  }

  auto peg_positions = [&](const std::array<int, 3>& tri) {
    std::vector<int> out;
    for (int p = 0; p < 3; ++p)
      if (state.has_peg(tri[p])) out.push_back(p);
    return out;
  };
  std::vector<int> p1 = peg_positions(clear_tri), p2 = peg_positions(keep_tri);
  if (p1.empty() || p1.size() > 2 || p2.empty() || p2.size() > 2)
    throw std::invalid_argument(
        "clear_k3_pair: each triangle needs at least one peg and one hole");

  K3ClearResult res;
  Builder b(host, state);

  auto hole_position = [&](const std::vector<int>& pegs) {
    for (int p = 0; p < 3; ++p)
      if (std::find(pegs.begin(), pegs.end(), p) == pegs.end()) return p;
    return -1;
  };

  if (p1.size() == 2) {
    if (p2.size() == 2) {
      int h2 = hole_position(p2);
      b.play(keep_tri[p2[0]], keep_tri[p2[1]], keep_tri[h2]);
    }
    // two holes now face the clearing pair; jump one peg over the other
    int a = p1[0], bb = p1[1];
    int keep_peg = p2.size() == 2 ? hole_position(p2) : p2[0];
    if (bb != keep_peg)
      b.play(clear_tri[a], clear_tri[bb], keep_tri[bb]);
    else
      b.play(clear_tri[bb], clear_tri[a], keep_tri[a]);
  } else if (p2.size() == 2) {
    int a = p1[0], h2 = hole_position(p2);
    if (a != h2) {
      b.play(clear_tri[a], keep_tri[a], keep_tri[h2]);
    } else {
      // the facing vertex is the hole: make room inside the kept triangle,
      // then the lone peg may land in either vacated spot
      b.play(keep_tri[p2[0]], keep_tri[p2[1]], keep_tri[h2]);
      res.pending = K3ClearResult::PendingJump{
          clear_tri[a], keep_tri[a], {keep_tri[p2[0]], keep_tri[p2[1]]}};
    }
  } else {
    int a = p1[0], c = p2[0];
    if (a != c)
      throw std::invalid_argument(
          "clear_k3_pair: lone pegs at unmatched positions (peg set is independent)");
    std::array<int, 2> others{};
    int oi = 0;
    for (int p = 0; p < 3; ++p)
      if (p != a) others[oi++] = p;
    res.pending = K3ClearResult::PendingJump{
        clear_tri[a], keep_tri[a], {keep_tri[others[0]], keep_tri[others[1]]}};
  }
  res.prefix = std::move(b.seq);
  return res;
}

K3ClearResult p2k3_clear(Config state, int clear_side) {
  if (clear_side != 0 && clear_side != 1)
    throw std::invalid_argument("p2k3_clear: clear_side must be 0 or 1");
  if (state.pegs & ~all_mask(6))
    throw std::invalid_argument("p2k3_clear: configuration outside P_2 x K_3");
  std::array<int, 3> t0{0, 1, 2}, t1{3, 4, 5};
  return clear_side == 0 ? clear_k3_pair(p2k3_graph(), t0, t1, state)
                         : clear_k3_pair(p2k3_graph(), t1, t0, state);
}

// ---------------------------------------------------------------------------
// Cartesian products with complete graphs
// ---------------------------------------------------------------------------

namespace {

struct KkCopyTracker {
  // Phase-2 bookkeeping for k = 3: a live copy either holds two pegs with
  // a known hole, or one peg whose position is still a pending two-way
  // choice occupying a reserved slot in the sequence.
  enum class Kind { two_pegs, pending_one, cleared };
  Kind kind = Kind::two_pegs;
  int hole_pos = -1;                 // two_pegs
  std::array<int, 2> cands{-1, -1};  // pending_one, positions within the copy
  int slot = -1;
  int from = -1, over = -1;
  int committed_pos = -1;  // set when a pending copy is resolved
};

}  // namespace

StrategyCertificate cartesian_kk_solve(const Graph& g, int k, const VertexSet& s) {
  const int gn = g.vertex_count();
  if (k < 3) throw std::invalid_argument("cartesian_kk_solve: k must be at least 3");
  if (!is_connected(g)) throw std::invalid_argument("cartesian_kk_solve: g must be connected");
  if (gn * k > 64) throw std::invalid_argument("cartesian_kk_solve: product exceeds 64 vertices");

  auto [prod, layout] = cartesian(g, make_complete(k));
  const int n = gn * k;
  if (s.universe() != n)
    throw std::invalid_argument("cartesian_kk_solve: s must range over the product");
  std::uint64_t sbits = s.low64();
  if (!is_independent_set(prod, sbits))
    throw std::invalid_argument("cartesian_kk_solve: s is not independent");
  if (std::popcount(sbits) != max_independent_set_size(prod, 64))
    throw std::invalid_argument("cartesian_kk_solve: s is not a maximum independent set");

  auto enc = [&](int v, int j) { return v * k + j; };

  JumpSequence seq;
  std::vector<int> hole_pos(gn, -1);
  for (int v = 0; v < gn; ++v)
    for (int j = 0; j < k; ++j)
      if (sbits & bit(enc(v, j))) hole_pos[v] = j;

  // Phase 1: propagate holes outward until every copy has exactly one.
  {
    std::vector<int> queue;
    std::vector<char> holed(gn, 0);
    for (int v = 0; v < gn; ++v)
      if (hole_pos[v] >= 0) {
        holed[v] = 1;
        queue.push_back(v);
      }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : g.neighbors(u).elements()) {
        if (holed[v]) continue;
        int i = hole_pos[u];
        int j = i == 0 ? 1 : 0;
        seq.push_back(Jump{enc(v, j), enc(u, j), enc(u, i)});
        hole_pos[v] = j;
        hole_pos[u] = j;
        holed[v] = 1;
        queue.push_back(v);
      }
    }
    for (int v = 0; v < gn; ++v)
      if (!holed[v]) throw std::logic_error("cartesian_kk_solve: phase 1 left a copy untouched");
  }

  // Spanning tree: breadth-first from vertex 0, leaves eliminated
  // deepest-first so each processed vertex is a leaf of what remains.
  std::vector<int> parent(gn, -1), depth(gn, 0), order;
  {
    std::vector<int> queue{0};
    std::vector<char> seen(gn, 0);
    seen[0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : g.neighbors(u).elements())
        if (!seen[v]) {
          seen[v] = 1;
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        }
    }
    for (int v = 1; v < gn; ++v) order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return depth[a] > depth[b]; });
  }

  if (k >= 4) {
    // Phase 2, steered endgames: solve each leaf copy onto an index facing
    // a peg of the parent, then jump across into the parent's hole.
    for (int v : order) {
      int u = parent[v];
      int i = hole_pos[u], hv = hole_pos[v];
      int j = -1;
      for (int cand = 0; cand < k; ++cand)
        if (cand != i && (k >= 5 || cand != hv)) {
          j = cand;
          break;
        }
      for (const Jump& jm : kk_solve_with_target(k, hv, j))
        seq.push_back(Jump{enc(v, jm.from), enc(v, jm.over), enc(v, jm.to)});
      seq.push_back(Jump{enc(v, j), enc(u, j), enc(u, i)});
      hole_pos[u] = j;
    }
    int r = 0, hv = hole_pos[0];
    int t = k >= 5 ? hv : (hv == 0 ? 1 : 0);
    for (const Jump& jm : kk_solve_with_target(k, hv, t))
      seq.push_back(Jump{enc(r, jm.from), enc(r, jm.over), enc(r, jm.to)});
  } else {
    // Phase 2 for k = 3: triangle clearing with deferred landing choices.
    std::vector<KkCopyTracker> st(gn);
    for (int v = 0; v < gn; ++v) st[v].hole_pos = hole_pos[v];

    auto tri = [&](int v) { return std::array<int, 3>{enc(v, 0), enc(v, 1), enc(v, 2)}; };
    auto commit = [&](int v, int pos) {
      KkCopyTracker& t = st[v];
      seq[t.slot] = Jump{t.from, t.over, enc(v, pos)};
      t.committed_pos = pos;
    };
    auto copy_pegs = [&](int v) -> std::uint64_t {
      const KkCopyTracker& t = st[v];
      if (t.kind == KkCopyTracker::Kind::two_pegs) {
        std::uint64_t m = 0;
        for (int j = 0; j < k; ++j)
          if (j != t.hole_pos) m |= bit(enc(v, j));
        return m;
      }
      return bit(enc(v, t.committed_pos));
    };

    for (int v : order) {
      int u = parent[v];
      KkCopyTracker& sv = st[v];
      KkCopyTracker& su = st[u];
      bool vp = sv.kind == KkCopyTracker::Kind::pending_one;
      bool up = su.kind == KkCopyTracker::Kind::pending_one;
      if (vp && up) {
        // both lone pegs are still free: land them on a shared index, then
        // jump one over the other with the landing again left open
        int j = -1;
        for (int cv : sv.cands)
          for (int cu : su.cands)
            if (cv == cu && (j < 0 || cv < j)) j = cv;
        if (j < 0) throw std::logic_error("cartesian_kk_solve: no common pending index");
        commit(v, j);
        commit(u, j);
        std::array<int, 2> others{};
        int oi = 0;
        for (int p = 0; p < 3; ++p)
          if (p != j) others[oi++] = p;
        su.kind = KkCopyTracker::Kind::pending_one;
        su.cands = {others[0], others[1]};
        su.from = enc(v, j);
        su.over = enc(u, j);
        su.slot = int(seq.size());
        seq.push_back(Jump{-1, -1, -1});
      } else {
        if (vp) {
          commit(v, sv.cands[0]);
          sv.kind = KkCopyTracker::Kind::two_pegs;  // definite now (one peg)
        }
        if (up) {
          commit(u, su.cands[0]);
          su.kind = KkCopyTracker::Kind::two_pegs;
        }
        // build the definite two-copy configuration and clear v into u
        std::uint64_t pair_pegs = 0;
        pair_pegs |= vp ? bit(enc(v, sv.committed_pos)) : copy_pegs(v);
        pair_pegs |= up ? bit(enc(u, su.committed_pos)) : copy_pegs(u);
        K3ClearResult res = clear_k3_pair(prod, tri(v), tri(u), Config{pair_pegs});
        std::uint64_t after = pair_pegs;
        for (const Jump& jm : res.prefix) {
          seq.push_back(jm);
          after = (after & ~bit(jm.from) & ~bit(jm.over)) | bit(jm.to);
        }
        if (res.pending) {
          su.kind = KkCopyTracker::Kind::pending_one;
          su.cands = {res.pending->landings[0] - enc(u, 0),
                      res.pending->landings[1] - enc(u, 0)};
          su.from = res.pending->from;
          su.over = res.pending->over;
          su.slot = int(seq.size());
          seq.push_back(Jump{-1, -1, -1});
        } else {
          su.kind = KkCopyTracker::Kind::two_pegs;
          su.hole_pos = -1;
          for (int j = 0; j < 3; ++j)
            if (!(after & bit(enc(u, j)))) su.hole_pos = j;
        }
      }
      sv.kind = KkCopyTracker::Kind::cleared;
    }

    KkCopyTracker& root = st[0];
    if (root.kind == KkCopyTracker::Kind::pending_one) {
      commit(0, root.cands[0]);
    } else {
      std::uint64_t pegs = copy_pegs(0);
      int p = smallest(pegs), q = second_smallest(pegs);
      seq.push_back(Jump{p, q, enc(0, root.hole_pos)});
    }
  }

  for (const Jump& jm : seq)
    if (jm.from < 0) throw std::logic_error("cartesian_kk_solve: unresolved pending jump");

  Config start = Config::with_holes(n, sbits);
  Config end;
  try {
    end = replay(prod, start, seq);
  } catch (const ReplayError& e) {
    throw std::logic_error(std::string("cartesian_kk_solve: invalid sequence: ") + e.what());
  }
  if (end.peg_count() != 1)
    throw std::logic_error("cartesian_kk_solve: did not reach a single peg");
  return StrategyCertificate{std::move(prod), "cartesian K_k strategy",
                             std::popcount(sbits), start, std::move(seq), end};
}

// ---------------------------------------------------------------------------
// Hamiltonian paths in bipartite graphs
// ---------------------------------------------------------------------------

StrategyCertificate hampath_solve(const Graph& h) {
  const int n = h.vertex_count();
  if (n < 4) throw std::invalid_argument("hampath_solve: need at least four vertices");
  if (n > 64) throw std::invalid_argument("hampath_solve: graph exceeds 64 vertices");
  StructureChecks sc = structure_checks(h, kDefaultHamPathCap);
  if (!sc.connected) throw std::invalid_argument("hampath_solve: graph must be connected");
  if (!sc.bipartition) throw std::invalid_argument("hampath_solve: graph must be bipartite");
  if (!sc.ham_path_searched)
    throw std::invalid_argument("hampath_solve: graph exceeds the Hamiltonian path cap");
  if (!sc.ham_path) throw std::invalid_argument("hampath_solve: no Hamiltonian path");

  const std::vector<int>& p = *sc.ham_path;
  std::uint64_t holes = 0;
  for (int i = 2; i < n; i += 2) holes |= bit(p[i]);

  Builder b(h, Config::with_holes(n, holes));
  // walk the first peg down the path, consuming every second vertex
  for (int t = 0; 2 * t + 2 <= n - 1; ++t) b.play(p[2 * t], p[2 * t + 1], p[2 * t + 2]);
  if (n % 2 == 0) b.play(p[n - 1], p[n - 2], p[n - 3]);

  if (b.c.peg_count() != 1)
    throw std::logic_error("hampath_solve: did not reach a single peg");
  return StrategyCertificate{h, "bipartite Hamiltonian path strategy",
                             std::popcount(holes), Config::with_holes(n, holes),
                             std::move(b.seq), b.c};
}

// ---------------------------------------------------------------------------
// Products of solvable factors
// ---------------------------------------------------------------------------

namespace {

// Apply a factor-level sequence inside one copy of that factor.
void transpose_g_jumps(Builder& b, const ProductLayout& layout, const JumpSequence& seq,
                       int h_coord) {
  for (const Jump& j : seq)
    b.play(layout.encode(j.from, h_coord), layout.encode(j.over, h_coord),
           layout.encode(j.to, h_coord));
}

void transpose_h_jumps(Builder& b, const ProductLayout& layout, const JumpSequence& seq,
                       int g_coord) {
  for (const Jump& j : seq)
    b.play(layout.encode(g_coord, j.from), layout.encode(g_coord, j.over),
           layout.encode(g_coord, j.to));
}

int final_vertex(const Graph& factor, Config start, const JumpSequence& seq) {
  Config c = replay(factor, start, seq);
  if (c.peg_count() != 1) throw std::logic_error("factor solve did not end at one peg");
  return std::countr_zero(c.pegs);
}

}  // namespace

StrategyCertificate product_compose(const Graph& g, const Graph& h,
                                    const VertexSet& s_g, const VertexSet& s_h) {
  const int gn = g.vertex_count(), hn = h.vertex_count();
  if (gn < 2 || hn < 2)
    throw std::invalid_argument("product_compose: factors need at least two vertices");
  if (gn * hn > 64) throw std::invalid_argument("product_compose: product exceeds 64 vertices");
  if (s_g.universe() != gn || s_h.universe() != hn)
    throw std::invalid_argument("product_compose: terminal states must match the factors");

  for (auto* pr : {&s_g, &s_h}) {
    const Graph& f = pr == &s_g ? g : h;
    if (!is_independent_set(f, pr->low64()))
      throw std::invalid_argument("product_compose: terminal state is not independent");
  }
  if (s_g.count() != fools_number(g).f_value || s_h.count() != fools_number(h).f_value)
    throw std::invalid_argument("product_compose: terminal states must be maximum-size");
  // hypotheses in reachability form: an already-lone peg counts as
  // solved, which is what admits P_2 as a factor
  for (int v = 0; v < gn; ++v)
    if (!reachable_single_peg_targets(g, Config::single_hole(gn, v)))
      throw std::invalid_argument("product_compose: g must be freely solvable");
  for (int w = 0; w < hn; ++w) {
    std::uint64_t nbhd = h.closed_neighborhood(w).low64();
    if (!(reachable_single_peg_targets(h, Config::single_hole(hn, w)) & nbhd))
      throw std::invalid_argument(
          "product_compose: h must be freely neighborhood-solvable");
  }

  auto g_solve = reachable_to_single_peg(g, Config::with_holes(gn, s_g.low64()));
  auto h_solve = reachable_to_single_peg(h, Config::with_holes(hn, s_h.low64()));
  if (!g_solve || !h_solve)
    throw std::invalid_argument("product_compose: terminal states are not solvable duals");

  auto [prod, layout] = cartesian(g, h);
  const int n = gn * hn;
  std::uint64_t start_holes = 0;
  for (int a : s_g.elements())
    for (int bb : s_h.elements()) start_holes |= bit(layout.encode(a, bb));
  Builder b(prod, Config::with_holes(n, start_holes));

  // clear every copy of G over a hole column, all ending on the same row v
  int v = final_vertex(g, Config::with_holes(gn, s_g.low64()), *g_solve);
  for (int x : s_h.elements()) transpose_g_jumps(b, layout, *g_solve, x);

  // clear every copy of H except H(v), all ending on the same column w
  int w = final_vertex(h, Config::with_holes(hn, s_h.low64()), *h_solve);
  for (int a = 0; a < gn; ++a)
    if (a != v) transpose_h_jumps(b, layout, *h_solve, a);

  // pegs now fill exactly H(v) and G(w); finish through an induced 4-cycle
  std::uint64_t nbhd_targets =
      reachable_single_peg_targets(h, Config::single_hole(hn, w)) &
      h.closed_neighborhood(w).low64();
  if (!nbhd_targets)
    throw std::logic_error("product_compose: neighborhood solve missing despite profile");
  int v2 = g.neighbors(v).first();

  if (nbhd_targets & bit(w)) {
    auto h_back = solve_to_targets(h, Config::single_hole(hn, w), bit(w));
    int w2 = h.neighbors(w).first();
    b.play(layout.encode(v, w), layout.encode(v, w2), layout.encode(v2, w2));
    b.play(layout.encode(v2, w), layout.encode(v2, w2), layout.encode(v, w2));
    transpose_h_jumps(b, layout, *h_back, v);
  } else {
    int w2 = smallest(nbhd_targets);
    auto h_back = solve_to_targets(h, Config::single_hole(hn, w), bit(w2));
    b.play(layout.encode(v, w), layout.encode(v2, w), layout.encode(v2, w2));
    transpose_h_jumps(b, layout, *h_back, v);
    b.play(layout.encode(v2, w2), layout.encode(v, w2), layout.encode(v, w));
  }

  auto g_end = reachable_to_single_peg(g, Config::single_hole(gn, v2));
  if (!g_end) throw std::logic_error("product_compose: g not solvable from the used hole");
  transpose_g_jumps(b, layout, *g_end, w);

  if (b.c.peg_count() != 1)
    throw std::logic_error("product_compose: did not reach a single peg");
  return StrategyCertificate{std::move(prod), "product composition strategy",
                             s_g.count() * s_h.count(),
                             Config::with_holes(n, start_holes), std::move(b.seq), b.c};
}

std::optional<int> solvable_neighbor_hole(const Graph& g, int v, int cap) {
  int n = g.vertex_count();
  if (v < 0 || v >= n) throw std::invalid_argument("solvable_neighbor_hole: bad vertex");
  for (int u : g.neighbors(v).elements())
    if (reachable_to_single_peg(g, Config::single_hole(n, u), cap)) return u;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Certificate serialization
// ---------------------------------------------------------------------------

namespace {

std::string hex_bits(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

std::uint64_t parse_hex_bits(const std::string& s) {
  if (s.rfind("0x", 0) != 0) throw std::invalid_argument("certificate: bad bitset " + s);
  return std::stoull(s.substr(2), nullptr, 16);
}

}  // namespace

std::string certificate_to_json(const StrategyCertificate& cert) {
  nlohmann::json doc;
  doc["graph"] = write_graph6(cert.graph);
  doc["description"] = cert.description;
  doc["claimed_terminal_size"] = cert.claimed_terminal_size;
  doc["start"] = hex_bits(cert.start.pegs);
  nlohmann::json jumps = nlohmann::json::array();
  for (const Jump& j : cert.jumps) jumps.push_back({j.from, j.over, j.to});
  doc["jumps"] = std::move(jumps);
  doc["end"] = hex_bits(cert.end.pegs);
  return doc.dump();
}

StrategyCertificate certificate_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  StrategyCertificate cert;
  cert.graph = parse_graph6(doc.at("graph").get<std::string>());
  cert.description = doc.value("description", std::string{});
  cert.claimed_terminal_size = doc.at("claimed_terminal_size").get<int>();
  cert.start = Config::from_pegs(parse_hex_bits(doc.at("start").get<std::string>()));
  for (const auto& j : doc.at("jumps"))
    cert.jumps.push_back(Jump{j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()});
  cert.end = Config::from_pegs(parse_hex_bits(doc.at("end").get<std::string>()));
  return cert;
}

}  // namespace pegsol
