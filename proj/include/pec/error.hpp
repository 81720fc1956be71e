#pragma once

#include <stdexcept>
#include <string>

namespace pec {

// Failure categories for the whole library. The CLI maps input-shaped
// failures to exit code 2; lemma verification failures are data (see
// CheckResult), not exceptions.
enum class Errc {
  degree_exceeded,
  duplicate_edge,
  loop_edge,
  unknown_vertex,
  unknown_edge,
  too_many_vertices,
  not_disjoint,
  empty_graph,
  invalid_colouring,
  vertex_not_in_subgraph,
  stale_component,
  budget_exceeded,
  not_three_colourable_remainder,
  not_delta_minimum_evidence,
  target_not_on_cycle,
  no_consecutive_minus_pair,
  precondition_not_spanning,
  precondition_failed,
  no_two_factor,
  not_pendant,
  not_reducible,
  edges_adjacent,
  not_cubic,
  collision_edge,
  unknown_name,
  malformed_graph6,
  invariant_violation,
  bad_cli_usage,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace pec
