#include "pec/report.hpp"

#include <algorithm>
#include <sstream>

#include "pec/graph6.hpp"

namespace pec {

namespace {

const char* status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::pass: return "pass";
    case CheckResult::Status::fail: return "fail";
    case CheckResult::Status::skipped: return "skipped";
  }
  return "?";
}

CheckResult::Status status_from(const std::string& s) {
  if (s == "pass") return CheckResult::Status::pass;
  if (s == "fail") return CheckResult::Status::fail;
  if (s == "skipped") return CheckResult::Status::skipped;
  fail(Errc::bad_cli_usage, "unknown check status '" + s + "'");
}

const char* bound_state_name(BoundEval::State s) {
  switch (s) {
    case BoundEval::State::satisfied: return "satisfied";
    case BoundEval::State::violated: return "violated";
    case BoundEval::State::skipped: return "skipped";
  }
  return "?";
}

BoundEval::State bound_state_from(const std::string& s) {
  if (s == "satisfied") return BoundEval::State::satisfied;
  if (s == "violated") return BoundEval::State::violated;
  if (s == "skipped") return BoundEval::State::skipped;
  fail(Errc::bad_cli_usage, "unknown bound state '" + s + "'");
}

nlohmann::json stat_to_json(const FactorStat& s) {
  switch (s.kind) {
    case FactorStat::Kind::value: return s.value;
    case FactorStat::Kind::infinite: return "inf";
    case FactorStat::Kind::undefined: return "undefined";
    case FactorStat::Kind::budget_exceeded: return "budget_exceeded";
  }
  return nullptr;
}

FactorStat stat_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return FactorStat::of(j.get<int>());
  std::string s = j.get<std::string>();
  if (s == "inf") return FactorStat::infinite();
  if (s == "undefined") return FactorStat::undefined();
  if (s == "budget_exceeded") return FactorStat::budget();
  fail(Errc::bad_cli_usage, "unknown factor stat '" + s + "'");
}

ExtremalClass extremal_from(const std::string& s) {
  for (ExtremalClass e :
       {ExtremalClass::not_extremal, ExtremalClass::petersen,
        ExtremalClass::p_prime, ExtremalClass::g5_exception})
    if (s == extremal_name(e)) return e;
  fail(Errc::bad_cli_usage, "unknown extremal class '" + s + "'");
}

}  // namespace

bool Report::any_check_failed() const {
  for (const auto& c : checks)
    if (c.status == CheckResult::Status::fail) return true;
  for (const auto& b : metrics.bounds)
    if (b.state == BoundEval::State::violated) return true;
  return false;
}

Report analyze(const Graph& g, const SearchBudget& budget, bool opt_in_large) {
  Report r;
  r.graph6 = emit_graph6(g);
  r.metrics = bound_suite(g, budget, opt_in_large);

  SminResult sr = s_exact(g, budget);
  for (int i = 0; i < g.edge_count(); ++i) {
    Edge e = g.edges()[i];
    r.witness.emplace_back(e.u, e.v, colour_name(sr.witness.at_index(i)));
  }

  DeltaClassPartition part = classify_delta_edges(sr.witness);
  for (auto& c : verify_structure(sr.witness, part)) r.checks.push_back(c);

  try {
    for (auto& c : verify_same_set_trichotomy(g, sr.witness, part))
      r.checks.push_back(c);
  } catch (const Error& e) {
    if (e.code() != Errc::precondition_not_spanning) throw;
    r.checks.push_back(check_skip("cycle_pair_trichotomy", e.what()));
  }

  // strong-matching transformation and its postconditions
  {
    EdgeColouring strong = payan_strong_matching(g, sr.witness);
    std::vector<Edge> deltas = colour_class(strong, Colour::delta);
    std::vector<int> ends;
    for (Edge e : deltas) {
      ends.push_back(e.u);
      ends.push_back(e.v);
    }
    bool ok = classify(strong) == Properness::proper &&
              static_cast<int>(deltas.size()) == sr.s &&
              induced_edge_count(g, ends) == static_cast<int>(deltas.size());
    for (int v : ends) ok = ok && g.degree(v) == 3;
    r.checks.push_back(
        ok ? check_pass("strong_matching_delta_class",
                        std::to_string(deltas.size()) + " delta edges")
           : check_fail("strong_matching_delta_class",
                        "postconditions violated"));
    try {
      std::vector<int> cover = independent_cover(g, strong, budget);
      r.checks.push_back(check_pass(
          "independent_cover_removal",
          std::to_string(cover.size()) + " vertices removed"));
    } catch (const Error& e) {
      r.checks.push_back(check_fail("independent_cover_removal", e.what()));
    }
  }

  try {
    r.checks.push_back(verify_c5_factor_lemma(g, budget, opt_in_large));
  } catch (const Error& e) {
    if (e.code() != Errc::precondition_failed &&
        e.code() != Errc::budget_exceeded)
      throw;
    r.checks.push_back(check_skip("c5_factor_uniformity", e.what()));
  }
  try {
    r.checks.push_back(permutation_graph_check(g, budget, opt_in_large));
  } catch (const Error& e) {
    if (e.code() != Errc::precondition_failed &&
        e.code() != Errc::budget_exceeded)
      throw;
    r.checks.push_back(check_skip("permutation_graph", e.what()));
  }

  return r;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  if (!r.graph_name.empty()) j["name"] = r.graph_name;
  j["graph6"] = r.graph6;
  j["n"] = r.metrics.n;
  j["m"] = r.metrics.m;
  j["v2"] = r.metrics.v2_count;
  j["v3"] = r.metrics.v3_count;
  j["s"] = r.metrics.s;
  j["gamma"] = r.metrics.gamma.str();
  j["odd_girth"] = r.metrics.odd_girth == kInfiniteLength
                       ? nlohmann::json("inf")
                       : nlohmann::json(r.metrics.odd_girth);
  j["oddness"] = stat_to_json(r.metrics.oddness);
  j["g_plus"] = stat_to_json(r.metrics.g_plus);
  j["extremal"] = extremal_name(r.metrics.extremal);

  nlohmann::json bounds = nlohmann::json::array();
  for (const auto& b : r.metrics.bounds) {
    nlohmann::json jb;
    jb["name"] = b.name;
    jb["state"] = bound_state_name(b.state);
    if (b.state != BoundEval::State::skipped) jb["rhs"] = b.rhs.str();
    if (!b.note.empty()) jb["note"] = b.note;
    bounds.push_back(jb);
  }
  j["bounds"] = bounds;

  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["status"] = status_name(c.status);
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  j["checks"] = checks;

  nlohmann::json witness = nlohmann::json::array();
  for (const auto& [u, v, col] : r.witness)
    witness.push_back(nlohmann::json::array({u, v, col}));
  j["witness"] = witness;

  if (r.timing_ms >= 0) j["timing_ms"] = r.timing_ms;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  if (j.contains("name")) r.graph_name = j["name"].get<std::string>();
  r.graph6 = j["graph6"].get<std::string>();
  r.metrics.n = j["n"].get<int>();
  r.metrics.m = j["m"].get<int>();
  r.metrics.v2_count = j["v2"].get<int>();
  r.metrics.v3_count = j["v3"].get<int>();
  r.metrics.s = j["s"].get<int>();
  r.metrics.gamma = Rational::parse(j["gamma"].get<std::string>());
  r.metrics.odd_girth = j["odd_girth"].is_string()
                            ? kInfiniteLength
                            : j["odd_girth"].get<int>();
  r.metrics.oddness = stat_from_json(j["oddness"]);
  r.metrics.g_plus = stat_from_json(j["g_plus"]);
  r.metrics.extremal = extremal_from(j["extremal"].get<std::string>());
  for (const auto& jb : j["bounds"]) {
    BoundEval b;
    b.name = jb["name"].get<std::string>();
    b.state = bound_state_from(jb["state"].get<std::string>());
    if (jb.contains("rhs")) b.rhs = Rational::parse(jb["rhs"].get<std::string>());
    if (jb.contains("note")) b.note = jb["note"].get<std::string>();
    r.metrics.bounds.push_back(b);
  }
  for (const auto& jc : j["checks"]) {
    CheckResult c;
    c.name = jc["name"].get<std::string>();
    c.status = status_from(jc["status"].get<std::string>());
    if (jc.contains("detail")) c.detail = jc["detail"].get<std::string>();
    r.checks.push_back(c);
  }
  for (const auto& jw : j["witness"])
    r.witness.emplace_back(jw[0].get<int>(), jw[1].get<int>(),
                           jw[2].get<std::string>());
  if (j.contains("timing_ms")) r.timing_ms = j["timing_ms"].get<double>();
  return r;
}

std::string to_dot(const EdgeColouring& c) {
  std::ostringstream out;
  out << "graph coloured {\n  node [shape=circle];\n";
  for (int v : c.graph().vertices()) out << "  " << v << ";\n";
  for (int i = 0; i < c.graph().edge_count(); ++i) {
    Edge e = c.graph().edges()[i];
    Colour t = c.at_index(i);
    out << "  " << e.u << " -- " << e.v << " [label=\"" << colour_name(t)
        << "\"";
    if (t == Colour::delta) out << ", style=bold";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pec
