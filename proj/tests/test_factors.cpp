#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pec/constructions.hpp"
#include "pec/factors.hpp"
#include "pec/smin.hpp"

using namespace pec;

TEST_CASE("two-factors of the named graphs") {
  auto k4 = enumerate_two_factors(make_named("K4"));
  CHECK(k4.size() == 3);
  for (const auto& f : k4) {
    REQUIRE(f.cycles.size() == 1);
    CHECK(f.cycles[0].size() == 4);  // Hamilton C4
    CHECK(f.odd_cycle_count() == 0);
  }

  auto petersen = enumerate_two_factors(make_named("PETERSEN"));
  CHECK(petersen.size() == 6);
  for (const auto& f : petersen) {
    REQUIRE(f.cycles.size() == 2);
    CHECK(f.cycles[0].size() == 5);
    CHECK(f.cycles[1].size() == 5);
    CHECK(f.odd_cycle_count() == 2);
    CHECK(f.min_odd_cycle_length() == 5);
  }

  auto c5 = enumerate_two_factors(make_named("C5"));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].cycles.size() == 1);
  CHECK(c5[0].cycles[0].size() == 5);

  // independent matching count: all 5-edge subsets of the Petersen graph
  Graph p = make_named("PETERSEN");
  int pm = 0;
  for (unsigned mask = 0; mask < (1u << 15); ++mask) {
    if (__builtin_popcount(mask) != 5) continue;
    uint64_t covered = 0;
    bool ok = true;
    for (int i = 0; i < 15 && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      Edge e = p.edges()[i];
      uint64_t both = uint64_t{1} << e.u | uint64_t{1} << e.v;
      if (covered & both) ok = false;
      covered |= both;
    }
    pm += ok && covered == p.vertex_mask();
  }
  CHECK(pm == 6);
}

TEST_CASE("factors cover every vertex exactly once") {
  for (const char* name : {"PETERSEN", "P_PRIME", "K33", "G5"}) {
    Graph g = make_named(name);
    for (const auto& f : enumerate_two_factors(g)) {
      uint64_t seen = 0;
      for (const auto& cyc : f.cycles) {
        CHECK(cyc.size() >= 3);
        for (size_t i = 0; i < cyc.size(); ++i) {
          CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
          CHECK_FALSE((seen >> cyc[i] & 1) != 0);
          seen |= uint64_t{1} << cyc[i];
        }
      }
      CHECK(seen == g.vertex_mask());
    }
  }
}

TEST_CASE("no two-factor cases") {
  Graph star = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_WITH_AS(enumerate_two_factors(star),
                       doctest::Contains("NoTwoFactor"), Error);
  CHECK_THROWS_AS(oddness(star), Error);
  CHECK_THROWS_AS(enumerate_two_factors(Graph::build(2, {{0, 1}})), Error);
}

TEST_CASE("oddness") {
  CHECK(oddness(make_named("K33")) == 0);
  CHECK(oddness(make_named("K4")) == 0);
  CHECK(oddness(make_named("PETERSEN")) == 2);
  CHECK(oddness(make_named("P_PRIME")) == 2);
  CHECK(oddness(make_named("G5")) == 1);  // subcubic: parity rule is cubic-only
  CHECK(oddness(make_named("C5")) == 1);
  CHECK(oddness(make_named("C6")) == 0);
}

TEST_CASE("odd girth and girth") {
  CHECK(odd_girth(make_named("C3")) == 3);
  CHECK(odd_girth(make_named("PETERSEN")) == 5);
  CHECK(odd_girth(make_named("K33")) == kInfiniteLength);
  CHECK(odd_girth(make_named("C6")) == kInfiniteLength);
  CHECK(odd_girth(make_named("G5")) == 3);

  CHECK(girth(make_named("PETERSEN")) == 5);
  CHECK(girth(make_named("K4")) == 3);
  CHECK(girth(make_named("K33")) == 4);
  CHECK(girth(make_named("C6")) == 6);
  CHECK(girth(Graph::build(3, {{0, 1}, {1, 2}})) == kInfiniteLength);
}

TEST_CASE("g_plus") {
  FactorStat p = g_plus(make_named("PETERSEN"));
  CHECK(p.kind == FactorStat::Kind::value);
  CHECK(p.value == 5);

  CHECK(g_plus(make_named("K33")).kind == FactorStat::Kind::infinite);
  CHECK(g_plus(make_named("K4")).kind == FactorStat::Kind::infinite);
  CHECK(g_plus(Graph::build(4, {{0, 1}, {0, 2}, {0, 3}})).kind ==
        FactorStat::Kind::undefined);
}

TEST_CASE("enumeration cap needs the opt-in flag") {
  std::vector<std::pair<int, int>> edges;
  Graph p = make_named("PETERSEN");
  for (int copy = 0; copy < 3; ++copy)
    for (Edge e : p.edges())
      edges.emplace_back(e.u + 10 * copy, e.v + 10 * copy);
  Graph three = Graph::build(30, edges);
  CHECK_THROWS_WITH_AS(enumerate_two_factors(three),
                       doctest::Contains("BudgetExceeded"), Error);
  CHECK(enumerate_two_factors(three, true).size() == 6 * 6 * 6);
  CHECK(g_plus(three).kind == FactorStat::Kind::budget_exceeded);
  CHECK(g_plus(three, true).value == 5);
}

TEST_CASE("factor odd-cycle statistics respect the odd girth") {
  std::mt19937 rng(31337);
  for (int round = 0; round < 10; ++round) {
    Graph g = oracle::random_cubic(10, rng);
    int og = odd_girth(g);
    for (const auto& f : enumerate_two_factors(g)) {
      int len = f.min_odd_cycle_length();
      if (len != kInfiniteLength) CHECK(len >= og);
    }
  }
}

TEST_CASE("oddness parity on cubic graphs") {
  std::mt19937 rng(64738);
  for (int round = 0; round < 12; ++round) {
    Graph g = oracle::random_cubic(8 + 2 * (rng() % 4), rng);
    try {
      CHECK(oddness(g) % 2 == 0);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::no_two_factor);
    }
  }
}
