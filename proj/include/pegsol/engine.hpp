#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "pegsol/graph.hpp"

namespace pegsol {

inline constexpr int kDefaultSearchCap = 24;

// Peg occupancy over the host graph's vertices: bit v set = peg at v.
struct Config {
  std::uint64_t pegs = 0;

  bool has_peg(int v) const { return (pegs >> v) & 1; }
  int peg_count() const;
  friend auto operator<=>(const Config&, const Config&) = default;

  static Config from_pegs(std::uint64_t bits) { return Config{bits}; }
  // All pegs except a hole at `hole`.
  static Config single_hole(int n, int hole);
  // Holes exactly at `holes`, pegs everywhere else.
  static Config with_holes(int n, std::uint64_t holes);
};

// Move a peg from `from` over the peg at `over` into the hole at `to`;
// the peg at `over` is removed.
struct Jump {
  int from = -1;
  int over = -1;
  int to = -1;
  friend auto operator<=>(const Jump&, const Jump&) = default;
};

using JumpSequence = std::vector<Jump>;

// Time reversal: if c -> c' via jump j, then the same triple j carries
// complement(c') to complement(c). A whole game replays backwards on the
// complementary configurations with the jump order reversed.
Config complement(const Graph& g, Config c);

bool is_legal(const Graph& g, Config c, Jump j);

// All legal jumps in lexicographic (from, over, to) order.
std::vector<Jump> legal_jumps(const Graph& g, Config c);

// Throws std::invalid_argument when the jump is not legal in c.
Config apply_jump(const Graph& g, Config c, Jump j);

enum class JumpOrder { lexicographic, reverse_lexicographic };

// Lexicographically first jump sequence reducing c to a single peg, or
// nullopt when none exists. Complete memoized search.
std::optional<JumpSequence> reachable_to_single_peg(const Graph& g, Config c,
                                                    int cap = kDefaultSearchCap);

// Like reachable_to_single_peg, but the final peg must lie in `targets`.
std::optional<JumpSequence> solve_to_targets(const Graph& g, Config c,
                                             std::uint64_t targets,
                                             int cap = kDefaultSearchCap);

// Every vertex on which a single final peg can be left starting from c.
std::uint64_t reachable_single_peg_targets(const Graph& g, Config c,
                                           int cap = kDefaultSearchCap,
                                           JumpOrder order = JumpOrder::lexicographic);

struct SolvabilityProfile {
  bool solvable = false;
  bool freely_solvable = false;
  bool freely_nbhd_solvable = false;
};

// Requires a connected graph within the search cap.
SolvabilityProfile solvability_profile(const Graph& g, int cap = kDefaultSearchCap);

struct FoolsReport {
  int f_value = 0;
  int witness_hole = -1;        // start vertex of the witnessed game
  VertexSet terminal;           // final peg set, |terminal| = f_value
  JumpSequence witness_sequence;  // replays from single_hole(witness_hole) to terminal
};

// Fool's solitaire number with a replayable witness. Iterates independent
// sets by decreasing size and tests whether the complementary configuration
// reduces to one peg; the witness is the reversed solving sequence.
FoolsReport fools_number(const Graph& g, int cap = kDefaultSearchCap);

// Independent computation path: exhaustive forward search over all games
// from every single-hole start, maximizing the dead-state peg count.
FoolsReport fools_number_forward(const Graph& g, int cap = kDefaultSearchCap,
                                 JumpOrder order = JumpOrder::lexicographic);

struct UpperBoundCheck {
  int alpha = 0;
  bool prop2_applies = false;  // alpha <= n-2 and every maximum independent
                               // set has an independent complement
};

UpperBoundCheck upper_bound_check(const Graph& g, int cap = kDefaultSearchCap);

}  // namespace pegsol
