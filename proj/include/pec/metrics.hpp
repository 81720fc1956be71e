#pragma once

#include <string>
#include <vector>

#include "pec/check.hpp"
#include "pec/factors.hpp"
#include "pec/rational.hpp"
#include "pec/smin.hpp"

namespace pec {

// One lower-bound inequality for gamma, evaluated exactly.
struct BoundEval {
  enum class State { satisfied, violated, skipped };
  std::string name;
  State state = State::skipped;
  Rational rhs;       // meaningful unless skipped
  std::string note;   // skip reason, or "equality" when tight
};

enum class ExtremalClass { not_extremal, petersen, p_prime, g5_exception };

const char* extremal_name(ExtremalClass e);

struct MetricsReport {
  int n = 0, m = 0;
  int v2_count = 0, v3_count = 0;
  int s = 0;
  Rational gamma;
  int odd_girth = 0;  // kInfiniteLength when bipartite
  FactorStat oddness;
  FactorStat g_plus;
  std::vector<BoundEval> bounds;
  ExtremalClass extremal = ExtremalClass::not_extremal;
};

// Evaluates every applicable lower bound for gamma as an exact rational and
// records satisfaction against the exact value; inapplicable bounds are
// skipped with the failed precondition named. Bounds:
//   odd_girth_bound          gamma >= 1 - 2/(3 g_odd)
//   degree_ratio_bound       gamma >= 1 - (2/15)/(1 + (2/3)|V2|/|V3|),
//                            for graphs other than G5 with |V3| > 0
//   gplus_bound              gamma >= 1 - 2n/((3n - |V2|) g+), min degree 2
//   gplus_eleven_twelfths    gamma >= max{1 - 3/(4 g+), 11/12}, when
//                            |V2| <= n/3 and g+ >= 11
//   factor_odd_cycle_floor   every 2-factor has >= s(G) odd cycles
// Infinite odd girth or g+ makes the subtracted term zero.
MetricsReport bound_suite(const Graph& g, const SearchBudget& budget = {},
                          bool opt_in_large = false);

// For a cubic graph without reducible triangles that admits a 2-factor of
// exactly s(G) five-cycles: asserts every 2-factor consists of s(G)
// five-cycles. PreconditionFailed names the violated clause.
CheckResult verify_c5_factor_lemma(const Graph& g,
                                   const SearchBudget& budget = {},
                                   bool opt_in_large = false);

// For a cubic graph with a 2-factor of s(G) induced odd cycles of length
// >= 5: asserts the qualifying factors have exactly two induced odd cycles
// of equal length (so the graph is a permutation graph), and that girth 5
// forces the Petersen graph. PreconditionFailed when no qualifying factor
// exists.
CheckResult permutation_graph_check(const Graph& g,
                                    const SearchBudget& budget = {},
                                    bool opt_in_large = false);

// G5_EXCEPTION iff isomorphic to G5; PETERSEN / P_PRIME iff gamma = 13/15
// with the matching isomorphism; NOT_EXTREMAL otherwise. Requires a
// connected graph with at least one edge. A connected graph with
// gamma = 13/15 isomorphic to neither witness violates a theorem and
// raises InvariantViolation.
ExtremalClass extremal_recognize(const Graph& g,
                                 const SearchBudget& budget = {});

}  // namespace pec
