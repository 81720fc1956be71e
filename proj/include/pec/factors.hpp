#pragma once

#include <limits>
#include <vector>

#include "pec/graph.hpp"

namespace pec {

inline constexpr int kInfiniteLength = std::numeric_limits<int>::max();

// Spanning disjoint cycle cover.
struct TwoFactor {
  std::vector<std::vector<int>> cycles;  // closed, first vertex not repeated

  int odd_cycle_count() const;
  // minimum odd cycle length; kInfiniteLength when every cycle is even
  int min_odd_cycle_length() const;
};

// All 2-factors. For a cubic graph these are complements of perfect
// matchings; degree-2 vertices contribute both their edges, so the removed
// set is a perfect matching on the degree-3 vertices. Deterministic order.
// NoTwoFactor when none exists; graphs with more than 24 vertices need
// opt_in_large (BudgetExceeded otherwise).
std::vector<TwoFactor> enumerate_two_factors(const Graph& g,
                                             bool opt_in_large = false);

// Minimum number of odd cycles over all 2-factors (even for cubic graphs).
int oddness(const Graph& g, bool opt_in_large = false);

// Length of the shortest odd cycle; kInfiniteLength for bipartite graphs.
int odd_girth(const Graph& g);

// Length of the shortest cycle; kInfiniteLength for forests.
int girth(const Graph& g);

// Three-valued factor statistic for reports.
struct FactorStat {
  enum class Kind { value, infinite, undefined, budget_exceeded };
  Kind kind = Kind::undefined;
  int value = 0;

  static FactorStat of(int v) { return {Kind::value, v}; }
  static FactorStat infinite() { return {Kind::infinite, 0}; }
  static FactorStat undefined() { return {Kind::undefined, 0}; }
  static FactorStat budget() { return {Kind::budget_exceeded, 0}; }
};

// Maximum over 2-factors of the factor's minimum odd cycle length; a factor
// with no odd cycle contributes "infinite"; "undefined" when the graph has
// no 2-factor.
FactorStat g_plus(const Graph& g, bool opt_in_large = false);

}  // namespace pec
