#pragma once

#include <string>

#include "pec/graph.hpp"

namespace pec {

// Header-less graph6 (McKay): 6-bit bytes offset by 63, upper triangle in
// column-major bit order, zero padding. Supports n <= 64 and rejects any
// input of maximum degree >= 4.
Graph parse_graph6(const std::string& line);

// Label-preserving encoding of the graph. Graphs whose id set has holes
// (after reductions) are compacted in ascending id order first.
std::string emit_graph6(const Graph& g);

}  // namespace pec
