#pragma once

#include <string>

#include "pegsol/graph.hpp"

namespace pegsol {

// Graph argument mini-grammar:
//   family            e.g. "petersen", "paw"
//   family:params     e.g. "path:5", "complete_bipartite:3,2"
//   join(spec,spec)
//   cartesian(spec,spec)
//   g6:LITERAL        a graph6 line, e.g. "g6:D?{"
Graph parse_graph_spec(const std::string& spec);

}  // namespace pegsol
