#include "pec/error.hpp"

namespace pec {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::degree_exceeded: return "DegreeExceeded";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::loop_edge: return "LoopEdge";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::unknown_edge: return "UnknownEdge";
    case Errc::too_many_vertices: return "TooManyVertices";
    case Errc::not_disjoint: return "NotDisjoint";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::invalid_colouring: return "InvalidColouring";
    case Errc::vertex_not_in_subgraph: return "VertexNotInSubgraph";
    case Errc::stale_component: return "StaleComponent";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_three_colourable_remainder:
      return "NotThreeColourableRemainder";
    case Errc::not_delta_minimum_evidence: return "NotDeltaMinimumEvidence";
    case Errc::target_not_on_cycle: return "TargetNotOnCycle";
    case Errc::no_consecutive_minus_pair: return "NoConsecutiveMinusPair";
    case Errc::precondition_not_spanning: return "PreconditionNotSpanning";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::no_two_factor: return "NoTwoFactor";
    case Errc::not_pendant: return "NotPendant";
    case Errc::not_reducible: return "NotReducible";
    case Errc::edges_adjacent: return "EdgesAdjacent";
    case Errc::not_cubic: return "NotCubic";
    case Errc::collision_edge: return "CollisionEdge";
    case Errc::unknown_name: return "UnknownName";
    case Errc::malformed_graph6: return "MalformedGraph6";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::bad_cli_usage: return "BadCliUsage";
  }
  return "UnknownError";
}

}  // namespace pec
