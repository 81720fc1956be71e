#pragma once

#include <map>
#include <vector>

#include "pec/check.hpp"
#include "pec/colouring.hpp"

namespace pec {

// A delta edge together with the alternating even path joining its ends in
// one two-colour subgraph; path plus delta edge close an odd cycle.
struct OddCycleCertificate {
  Edge delta_edge;
  Colour x, y;             // the alternating pair, x < y
  std::vector<int> cycle;  // odd length >= 3; front/back are the delta ends,
                           // the delta edge closes the cycle
};

// Which colour pair joins each delta edge's ends: a_set for (alpha,beta),
// b_set for (beta,gamma), c_set for (alpha,gamma). Sets may overlap: an
// edge with a degree-2 end belongs to two of them.
struct DeltaClassPartition {
  std::vector<Edge> a_set, b_set, c_set;
  std::map<Edge, std::vector<OddCycleCertificate>> certificates;

  bool empty() const { return certificates.empty(); }
  std::vector<Edge> delta_edges() const;
  // all certificates in a stable order (edges ascending, pairs in
  // (alpha,beta), (beta,gamma), (alpha,gamma) order)
  std::vector<OddCycleCertificate> all_certificates() const;
  // membership sets of one edge, as indices 0=a, 1=b, 2=c
  std::vector<int> sets_of(Edge e) const;
};

// Builds certificates for every delta edge of a proper delta-minimum
// colouring (delta-minimality is caller-asserted). Colour pairs are probed
// in the fixed order above and every successful pair is recorded.
// NotDeltaMinimumEvidence if some delta edge admits no even alternating
// path between its ends.
DeltaClassPartition classify_delta_edges(const EdgeColouring& c);

// Moves the delta colour from cert.delta_edge to target along the
// certificate cycle, exchanging colours stepwise so every intermediate
// state stays proper. The cycle itself is unchanged; only its edges are
// recoloured. TargetNotOnCycle if target is not a cycle edge. Also verifies
// the cycle's outside-incident edges all carry the pair's third colour and
// raises NotDeltaMinimumEvidence otherwise.
EdgeColouring rotate_delta_edge(const EdgeColouring& c,
                                const OddCycleCertificate& cert, Edge target);

// Runtime verifiers for the structural facts about delta-minimum
// colourings: colour contact and end degrees of delta edges, degree-2
// spacing on certificate cycles, pairwise disjointness of cycles,
// isolation of degree-2-ended delta edges, induced-subgraph bounds for
// pairs and same-set triples. One aggregated record per named check.
std::vector<CheckResult> verify_structure(const EdgeColouring& c,
                                          const DeltaClassPartition& p);

// For a cubic graph whose certificate cycles span all vertices and whose
// delta edges all lie in a_set: every pair of cycles is at distance >= 2,
// or joined by >= 3 edges, or each has >= 2 chords.
// PreconditionNotSpanning if the regime does not apply.
std::vector<CheckResult> verify_same_set_trichotomy(
    const Graph& g, const EdgeColouring& c, const DeltaClassPartition& p);

// Rotates every delta edge to a position with both ends of degree 3 whose
// off-cycle edges do not reach previously fixed delta edges, yielding a
// delta-minimum colouring whose delta class is a strong matching with all
// ends of degree 3. NoConsecutiveMinusPair if no legal position exists
// (impossible for genuinely delta-minimum input).
EdgeColouring payan_strong_matching(const Graph& g, const EdgeColouring& c);

// One endpoint (least id) per delta edge of a strong-matching witness:
// pairwise non-adjacent degree-3 vertices whose removal leaves a
// 3-edge-colourable graph (verified).
std::vector<int> independent_cover(const Graph& g, const EdgeColouring& c,
                                   const SearchBudget& budget = {});

}  // namespace pec
