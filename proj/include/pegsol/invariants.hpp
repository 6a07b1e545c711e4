#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pegsol/graph.hpp"

namespace pegsol {

inline constexpr int kDefaultExactCap = 24;
inline constexpr int kDefaultHamPathCap = 20;

struct IndependenceResult {
  int alpha = 0;
  std::vector<VertexSet> maximum_sets;  // all of them, lexicographic
};

// Exact independence number via branch and bound (greedy clique-cover
// bound, branching on the highest-degree candidate), then an enumeration
// pass collecting every maximum independent set.
IndependenceResult independence_number(const Graph& g, int cap = kDefaultExactCap);

// Just alpha, skipping the set enumeration.
int max_independent_set_size(const Graph& g, int cap = kDefaultExactCap);

int chromatic_number(const Graph& g, int cap = kDefaultExactCap);

struct StructureChecks {
  bool connected = false;
  // present iff bipartite; first class is the larger one (ties: the class
  // containing vertex 0)
  std::optional<std::pair<VertexSet, VertexSet>> bipartition;
  std::optional<std::vector<int>> ham_path;
  bool ham_path_searched = false;  // false when the graph exceeded the cap
};

StructureChecks structure_checks(const Graph& g, int ham_cap = kDefaultHamPathCap);

bool is_connected(const Graph& g);

bool is_independent_set(const Graph& g, std::uint64_t vertices);

// Visit every independent set of exactly k vertices in ascending
// lexicographic order (as bitmasks). Visitor returns true to stop early.
// Requires vertex_count() <= 64.
void for_each_independent_set(const Graph& g, int k,
                              const std::function<bool(std::uint64_t)>& visit);

}  // namespace pegsol
