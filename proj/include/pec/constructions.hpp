#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "pec/graph.hpp"

namespace pec {

// Canonical labelled instances.
//   PETERSEN: outer cycle 0..4, inner pentagram 5..9, spokes i-(i+5).
//   G5: 5-cycle 0..4 plus chords 1-3 and 2-4; vertex 0 is the unique
//       degree-2 vertex.
//   P_PRIME: two G5 copies (0..4 and 5..9) plus the edge 0-5 joining their
//       degree-2 vertices.
//   K4, K33, C<k> (k >= 3).
// Names are case-insensitive; cycles accept "C5" or "CYCLE(5)".
Graph make_named(const std::string& name);

// The stored attachment choice for dot products on a Petersen copy: two
// spokes at distance 1 (0-5 and 1-6).
std::pair<Edge, Edge> petersen_attachment_pair();

// Record of one gamma-monotone reduction.
struct ReductionStep {
  enum class Kind { pendant_removal, triangle_contraction } kind;
  std::vector<int> removed_vertices;
  std::vector<Edge> removed_edges;
  int introduced_vertex = -1;  // triangle case only
  std::vector<Edge> introduced_edges;
};

// Remove a degree-1 vertex. NotPendant otherwise.
std::pair<Graph, ReductionStep> remove_pendant(const Graph& g, int v);

// Contract a reducible triangle (three mutually adjacent degree-3 vertices
// with distinct outside neighbours) to a single vertex, reusing the smallest
// removed id. NotReducible otherwise.
std::pair<Graph, ReductionStep> reduce_triangle(const Graph& g,
                                                const std::array<int, 3>& t);

// Apply pendant removals and triangle contractions to a fixpoint,
// deterministically (least pendant vertex first, then lexicographically
// least reducible triangle).
std::pair<Graph, std::vector<ReductionStep>> reduce_all(const Graph& g);

// Dot product: remove non-adjacent edges e1 = ab, f1 = cd from cubic g1,
// remove the ends of uv from cubic g2 (its ids are shifted past g1's), and
// join a,b to the former neighbours of u and c,d to those of v. The default
// pairing attaches a (resp. c) to the least-id former neighbour;
// alt_pairing swaps the pairing on the v side.
Graph dot_product(const Graph& g1, Edge e1, Edge f1, const Graph& g2, Edge uv,
                  bool alt_pairing = false);

}  // namespace pec
