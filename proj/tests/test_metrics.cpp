#include <doctest.h>

#include "oracles.hpp"
#include "pec/constructions.hpp"
#include "pec/metrics.hpp"

using namespace pec;

namespace {

const BoundEval& bound_named(const MetricsReport& r, const std::string& name) {
  for (const auto& b : r.bounds)
    if (b.name == name) return b;
  throw std::logic_error("no bound named " + name);
}

}  // namespace

TEST_CASE("bound suite on the Petersen graph: three tight bounds") {
  MetricsReport r = bound_suite(make_named("PETERSEN"));
  CHECK(r.s == 2);
  CHECK(r.v2_count == 0);
  CHECK(r.v3_count == 10);
  CHECK(r.odd_girth == 5);
  CHECK(r.oddness.value == 2);
  CHECK(r.g_plus.value == 5);
  CHECK(r.extremal == ExtremalClass::petersen);

  const BoundEval& rizzi = bound_named(r, "odd_girth_bound");
  CHECK(rizzi.state == BoundEval::State::satisfied);
  CHECK(rizzi.rhs == Rational(13, 15));
  CHECK(rizzi.note == "equality");

  const BoundEval& ratio = bound_named(r, "degree_ratio_bound");
  CHECK(ratio.state == BoundEval::State::satisfied);
  CHECK(ratio.rhs == Rational(13, 15));

  const BoundEval& gplus = bound_named(r, "gplus_bound");
  CHECK(gplus.state == BoundEval::State::satisfied);
  CHECK(gplus.rhs == Rational(13, 15));

  CHECK(bound_named(r, "gplus_eleven_twelfths_bound").state ==
        BoundEval::State::skipped);
  const BoundEval& floor = bound_named(r, "factor_odd_cycle_floor");
  CHECK(floor.state == BoundEval::State::satisfied);
}

TEST_CASE("bound suite on G5 skips the degree-ratio bound") {
  MetricsReport r = bound_suite(make_named("G5"));
  CHECK(r.gamma == Rational(6, 7));
  const BoundEval& ratio = bound_named(r, "degree_ratio_bound");
  CHECK(ratio.state == BoundEval::State::skipped);
  CHECK(ratio.note == "the G5 exception");
  const BoundEval& rizzi = bound_named(r, "odd_girth_bound");
  CHECK(rizzi.rhs == Rational(7, 9));  // odd girth 3
  CHECK(rizzi.state == BoundEval::State::satisfied);
  CHECK(r.extremal == ExtremalClass::g5_exception);
}

TEST_CASE("bound suite on bipartite controls reaches rhs = 1") {
  MetricsReport r = bound_suite(make_named("K33"));
  CHECK(r.gamma == Rational(1));
  CHECK(r.odd_girth == kInfiniteLength);
  CHECK(r.g_plus.kind == FactorStat::Kind::infinite);
  CHECK(bound_named(r, "odd_girth_bound").rhs == Rational(1));
  CHECK(bound_named(r, "gplus_bound").rhs == Rational(1));
  // |V2| = 0 <= n/3 and infinite g+ >= 11: the max{...} bound applies at 1
  const BoundEval& eleven = bound_named(r, "gplus_eleven_twelfths_bound");
  CHECK(eleven.state == BoundEval::State::satisfied);
  CHECK(eleven.rhs == Rational(1));

  MetricsReport k4 = bound_suite(make_named("K4"));
  // odd girth 3: rhs = 1 - 2/9
  CHECK(bound_named(k4, "odd_girth_bound").rhs == Rational(7, 9));
  CHECK(k4.gamma == Rational(1));
}

TEST_CASE("bound suite honours the enumeration budget") {
  std::vector<std::pair<int, int>> edges;
  Graph p = make_named("PETERSEN");
  for (int copy = 0; copy < 3; ++copy)
    for (Edge e : p.edges())
      edges.emplace_back(e.u + 10 * copy, e.v + 10 * copy);
  Graph three = Graph::build(30, edges);
  MetricsReport r = bound_suite(three);
  CHECK(r.g_plus.kind == FactorStat::Kind::budget_exceeded);
  CHECK(bound_named(r, "gplus_bound").state == BoundEval::State::skipped);
  CHECK(bound_named(r, "factor_odd_cycle_floor").state ==
        BoundEval::State::skipped);

  MetricsReport big = bound_suite(three, {}, true);
  CHECK(big.g_plus.value == 5);
  CHECK(bound_named(big, "gplus_bound").state == BoundEval::State::satisfied);
}

TEST_CASE("c5 factor lemma") {
  CheckResult p = verify_c5_factor_lemma(make_named("PETERSEN"));
  CHECK(p.status == CheckResult::Status::pass);

  CheckResult pp = verify_c5_factor_lemma(make_named("P_PRIME"));
  CHECK(pp.status == CheckResult::Status::pass);

  CHECK_THROWS_WITH_AS(verify_c5_factor_lemma(make_named("K4")),
                       doctest::Contains("PreconditionFailed"), Error);
  CHECK_THROWS_AS(verify_c5_factor_lemma(make_named("C5")), Error);
}

TEST_CASE("permutation graph check") {
  CheckResult p = permutation_graph_check(make_named("PETERSEN"));
  CHECK(p.status == CheckResult::Status::pass);
  CHECK(p.detail.find("Petersen") != std::string::npos);

  CHECK_THROWS_WITH_AS(permutation_graph_check(make_named("K4")),
                       doctest::Contains("PreconditionFailed"), Error);
  // P' factors into five-cycles, but they are chorded, hence not induced
  CHECK_THROWS_AS(permutation_graph_check(make_named("P_PRIME")), Error);
  CHECK_THROWS_AS(permutation_graph_check(make_named("K33")), Error);
}

TEST_CASE("extremal recognition") {
  CHECK(extremal_recognize(make_named("PETERSEN")) == ExtremalClass::petersen);
  CHECK(extremal_recognize(make_named("P_PRIME")) == ExtremalClass::p_prime);
  CHECK(extremal_recognize(make_named("G5")) == ExtremalClass::g5_exception);
  CHECK(extremal_recognize(make_named("K4")) == ExtremalClass::not_extremal);
  CHECK(extremal_recognize(make_named("C7")) == ExtremalClass::not_extremal);

  Graph disconnected = Graph::build(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK_THROWS_AS(extremal_recognize(disconnected), Error);
  CHECK_THROWS_WITH_AS(extremal_recognize(Graph::build(2, {})),
                       doctest::Contains("Precondition"), Error);
}

TEST_CASE("metrics on graphs with pendant vertices") {
  // star: V1 vertices make the g+ bounds inapplicable
  Graph star = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
  MetricsReport r = bound_suite(star);
  CHECK(r.gamma == Rational(1));
  CHECK(bound_named(r, "gplus_bound").state == BoundEval::State::skipped);
  CHECK(bound_named(r, "degree_ratio_bound").state ==
        BoundEval::State::satisfied);
  for (const auto& b : r.bounds) CHECK(b.state != BoundEval::State::violated);
}
