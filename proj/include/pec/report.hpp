#pragma once

#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "pec/metrics.hpp"
#include "pec/structure.hpp"

namespace pec {

// Everything the CLI reports about one graph. Serializes to a key-sorted
// JSON document; byte-stable for a fixed input unless timing is enabled.
struct Report {
  std::string graph_name;  // optional
  std::string graph6;
  MetricsReport metrics;
  std::vector<CheckResult> checks;
  // witness colouring as sorted (u, v, colour-name) triples
  std::vector<std::tuple<int, int, std::string>> witness;
  double timing_ms = -1;  // serialized only when >= 0

  bool any_check_failed() const;
};

// Full pipeline on one graph: exact solve, certificates, every structural
// verifier, the strong-matching transformation and its postconditions, the
// bound suite, and extremal recognition.
Report analyze(const Graph& g, const SearchBudget& budget = {},
               bool opt_in_large = false);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

// DOT export of a colouring; delta edges are drawn bold.
std::string to_dot(const EdgeColouring& c);

}  // namespace pec
