#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pec/graph.hpp"

namespace pec {

// The four edge colours; delta is the distinguished minimized colour.
enum class Colour : uint8_t { alpha = 0, beta = 1, gamma = 2, delta = 3 };

inline constexpr Colour kAllColours[4] = {Colour::alpha, Colour::beta,
                                          Colour::gamma, Colour::delta};

const char* colour_name(Colour c);                  // "alpha" .. "delta"
std::optional<Colour> colour_from_name(const std::string& name);

// proper: no two adjacent edges share a colour.
// delta_improper: every monochromatic adjacent pair is delta-delta.
enum class Properness { proper, delta_improper, invalid };

// Total assignment edge -> colour over a fixed graph. Immutable value;
// with() returns an updated copy.
class EdgeColouring {
 public:
  EdgeColouring(Graph g, std::vector<Colour> by_edge);

  const Graph& graph() const { return g_; }
  Colour at(Edge e) const { return by_edge_[g_.edge_index(e)]; }
  Colour at_index(int i) const { return by_edge_[i]; }
  const std::vector<Colour>& assignment() const { return by_edge_; }

  EdgeColouring with(Edge e, Colour c) const;

  // bit i set iff some edge at v has colour i
  unsigned colours_at(int v) const;
  // the edge at v coloured c, if any (colourings may be improper, so this
  // returns the least such edge)
  std::optional<Edge> edge_at(int v, Colour c) const;

  friend bool operator==(const EdgeColouring& a, const EdgeColouring& b) {
    return a.g_ == b.g_ && a.by_edge_ == b.by_edge_;
  }
  friend bool operator!=(const EdgeColouring& a, const EdgeColouring& b) {
    return !(a == b);
  }

 private:
  Graph g_;
  std::vector<Colour> by_edge_;
};

Properness classify(const EdgeColouring& c);

// Exactly the edges coloured x; over a proper or delta-improper colouring
// the four classes partition E(G).
std::vector<Edge> colour_class(const EdgeColouring& c, Colour x);

// Maximal component of the subgraph spanned by two colour classes: an
// alternating path or even cycle.
struct KempeComponent {
  Colour x, y;                // x < y
  std::vector<int> vertices;  // path: both ends included; cycle: closed,
                              // first vertex not repeated, even length >= 4
  bool is_cycle = false;
};

// The component of the (x, y)-subgraph through v. The colouring must be
// proper, x != y, and v must touch at least one edge coloured x or y.
KempeComponent kempe_component_at(const EdgeColouring& c, Colour x, Colour y,
                                  int v);

// Exchange the two colours along the component. comp must be a current
// component of c (StaleComponent otherwise); the result is proper again.
EdgeColouring kempe_swap(const EdgeColouring& c, const KempeComponent& comp);

// Turns a delta-improper colouring into a proper one whose delta class is a
// subset of the input's. Proper input is returned unchanged; invalid input
// raises InvalidColouring. Deterministic: conflicts are processed in
// ascending lexicographic order of the conflicting edge pair, recolours take
// the least legal colour, and the alternating-path case picks the conflict
// edge whose far end is not the path's other endpoint. A final sweep
// recolours any leftover delta edge with a colour free at both ends.
EdgeColouring repair_delta_improper(const EdgeColouring& c);

// Node cap for the exact searches; exceeding it raises BudgetExceeded
// rather than returning an approximation.
struct SearchBudget {
  uint64_t max_nodes = 200'000'000;
};

// A proper colouring using only {alpha, beta, gamma} when one exists.
// Exact backtracking over edges in a smallest-last vertex order; an edge's
// admissible colours are those absent at both endpoints.
std::optional<EdgeColouring> decide_three_colourable(
    const Graph& g, const SearchBudget& budget = {});

}  // namespace pec
