#pragma once

#include <utility>
#include <vector>

#include "pec/colouring.hpp"
#include "pec/rational.hpp"

namespace pec {

// Exact optimum of the fourth-colour minimization.
struct SminResult {
  int s = 0;          // delta edges in any delta-minimum colouring
  int c = 0;          // m - s: largest 3-edge-colourable subgraph size
  Rational gamma;     // 1 - s/m, exact
  EdgeColouring witness;  // proper, delta class of size s
};

// Exact s(G) by growing edge-deletion sets: the first k whose deletion
// leaves a 3-edge-colourable remainder. Deterministic: pendant vertices are
// stripped first (and lifted back greedily afterwards), components are
// solved independently and summed, candidate sets run in colex order over
// edge indices, and the first witness wins. EmptyGraph when m = 0.
SminResult s_exact(const Graph& g, const SearchBudget& budget = {});

// Upper bound from a vertex set whose removal leaves a 3-edge-colourable
// graph: colour the remainder with three colours, give delta to every edge
// incident to vs, repair. Returns the repaired delta-class size (>= s(G))
// and the proper witness. NotThreeColourableRemainder when the removal is
// not 3-edge-colourable.
std::pair<int, EdgeColouring> s_upper_from_vertices(
    const Graph& g, const std::vector<int>& vs, const SearchBudget& budget = {});

// 1 - s(G)/m as an exact rational. EmptyGraph when m = 0.
Rational gamma(const Graph& g, const SearchBudget& budget = {});

}  // namespace pec
