#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pegsol/graph.hpp"

namespace pegsol {

// graph6 text encoding: printable bytes 63..126, N(n) size prefix (one byte
// below 63 vertices, '~' plus three bytes up to 2^18), then the upper
// adjacency triangle packed column-major into 6-bit groups, zero padded.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// One representative per isomorphism class, n <= 7, ordered by canonical
// adjacency mask. Results are cached for the process lifetime.
const std::vector<Graph>& enumerate_connected(int n);
const std::vector<Graph>& enumerate_graphs(int n);  // includes disconnected

}  // namespace pegsol
