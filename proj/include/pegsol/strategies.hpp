#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "pegsol/engine.hpp"
#include "pegsol/graph.hpp"

namespace pegsol {

// An explicit jump sequence witnessing that the holes of `start` form a
// terminal state: replaying `jumps` from `start` must end at `end`, a
// single-peg configuration. Establishes F(graph) >= claimed_terminal_size.
struct StrategyCertificate {
  Graph graph;
  std::string description;
  int claimed_terminal_size = 0;
  Config start;
  JumpSequence jumps;
  Config end;
};

struct ReplayError : std::runtime_error {
  int index;
  ReplayError(int i, const std::string& what)
      : std::runtime_error("jump " + std::to_string(i) + ": " + what), index(i) {}
};

// Applies the jumps in order; throws ReplayError at the first illegal jump.
Config replay(const Graph& g, Config start, const JumpSequence& seq);

// Replay + claim checks; on failure optionally reports why.
bool validate_certificate(const StrategyCertificate& cert, std::string* why = nullptr);

// Join strategy: from holes at a maximum independent set s lying inside one
// side of g ∨ h, down to one peg. When both sides are edgeless with at
// least two vertices each (the complete bipartite case, where the maximum
// set is not a terminal state), s must instead be all but one vertex of a
// largest side and the certificate witnesses F = alpha - 1.
StrategyCertificate solve_join(const Graph& g, const Graph& h, const VertexSet& s);

// Solve K_k from a single hole, forcing the final peg position: any target
// for k >= 5, any target except the hole for k = 4, only the hole for k = 3.
JumpSequence kk_solve_with_target(int k, int hole, int target);

// Outcome of clearing one K_3 of a matched triangle pair. `prefix` is
// committed; when `pending` is set, exactly one jump remains and its
// landing may still be chosen between two vertices of the kept triangle
// (each choice leaves the lone kept peg on that vertex).
struct K3ClearResult {
  JumpSequence prefix;
  struct PendingJump {
    int from = -1;
    int over = -1;
    std::array<int, 2> landings{-1, -1};
  };
  std::optional<PendingJump> pending;
};

// The P_2 □ K_3 clearing move: each triangle must hold one or two pegs
// (so at least one hole each) and the peg set must not be independent.
// Triangles are {0,1,2} and {3,4,5} with j matched to j+3; clear_side
// selects which one is emptied.
K3ClearResult p2k3_clear(Config state, int clear_side);

// The host graph of p2k3_clear.
const Graph& p2k3_graph();

// Generic form used inside products: triangles given as host-graph vertex
// triples matched by position.
K3ClearResult clear_k3_pair(const Graph& host, const std::array<int, 3>& clear_tri,
                            const std::array<int, 3>& keep_tri, Config state);

// Cartesian-product strategy for g □ K_k, k >= 3: from holes at a maximum
// independent set s of the product down to one peg. Phase 1 gives every
// K_k copy exactly one hole using cross-copy jumps; Phase 2 eliminates
// spanning-tree leaves, steering final pegs for k >= 4 and coordinating
// deferred K_3 clearing choices for k = 3. No product-level search.
StrategyCertificate cartesian_kk_solve(const Graph& g, int k, const VertexSet& s);

// Bipartite Hamiltonian-path strategy: witnesses a terminal state of size
// ceil(n/2) - 1 = alpha - 1 on a connected bipartite graph with a
// Hamiltonian path and at least four vertices.
StrategyCertificate hampath_solve(const Graph& h);

// Product composition: from holes at s_g × s_h on g □ h down to one peg,
// where s_g, s_h are maximum terminal states of the factors, g is freely
// solvable and h is freely neighborhood-solvable. Searches run only on the
// factors.
StrategyCertificate product_compose(const Graph& g, const Graph& h,
                                    const VertexSet& s_g, const VertexSet& s_h);

// Weaker factor condition mentioned alongside the product bound: some
// neighbor v' of v such that the single-hole-at-v' game is solvable.
// Exposed for experimentation; product_compose does not rely on it.
std::optional<int> solvable_neighbor_hole(const Graph& g, int v,
                                          int cap = kDefaultSearchCap);

// Wire format: graph6 text, peg bitsets as hex, jump triple list.
std::string certificate_to_json(const StrategyCertificate& cert);
StrategyCertificate certificate_from_json(const std::string& text);

}  // namespace pegsol
