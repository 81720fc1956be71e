#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pec/constructions.hpp"
#include "pec/smin.hpp"

using namespace pec;

namespace {

Graph triangle() { return Graph::build(3, {{0, 1}, {1, 2}, {2, 0}}); }

Graph star3() { return Graph::build(4, {{0, 1}, {0, 2}, {0, 3}}); }

EdgeColouring colour_all(const Graph& g, Colour c) {
  return EdgeColouring(g, std::vector<Colour>(g.edge_count(), c));
}

std::set<Edge> as_set(const std::vector<Edge>& es) {
  return std::set<Edge>(es.begin(), es.end());
}

}  // namespace

TEST_CASE("classify") {
  Graph c3 = triangle();
  EdgeColouring proper(c3, {Colour::alpha, Colour::beta, Colour::gamma});
  CHECK(classify(proper) == Properness::proper);

  CHECK(classify(colour_all(star3(), Colour::delta)) ==
        Properness::delta_improper);

  EdgeColouring invalid(c3, {Colour::alpha, Colour::alpha, Colour::beta});
  CHECK(classify(invalid) == Properness::invalid);
}

TEST_CASE("colour_class") {
  Graph c3 = triangle();
  EdgeColouring proper(c3, {Colour::alpha, Colour::beta, Colour::gamma});
  CHECK(colour_class(proper, Colour::delta).empty());
  CHECK(colour_class(colour_all(star3(), Colour::delta), Colour::delta).size() ==
        3);

  // the four classes partition E
  Graph petersen = make_named("PETERSEN");
  EdgeColouring w = s_exact(petersen).witness;
  size_t total = 0;
  for (Colour t : kAllColours) total += colour_class(w, t).size();
  CHECK(total == 15);
  CHECK(colour_class(w, Colour::delta).size() == 2);
}

TEST_CASE("kempe_component_at") {
  Graph c4 = make_named("C4");
  EdgeColouring alt(c4, {Colour::alpha, Colour::beta, Colour::beta,
                         Colour::alpha});
  // edges sorted: 0-1, 0-3, 1-2, 2-3 -> alternating around the cycle
  CHECK(classify(alt) == Properness::proper);
  KempeComponent comp = kempe_component_at(alt, Colour::alpha, Colour::beta, 0);
  CHECK(comp.is_cycle);
  CHECK(comp.vertices.size() == 4);

  Graph k13 = star3();
  EdgeColouring stc(k13, {Colour::alpha, Colour::beta, Colour::gamma});
  KempeComponent path =
      kempe_component_at(stc, Colour::alpha, Colour::beta, 0);
  CHECK_FALSE(path.is_cycle);
  CHECK(path.vertices.size() == 3);
  CHECK(path.vertices[1] == 0);  // centre is interior

  CHECK_THROWS_WITH_AS(
      kempe_component_at(stc, Colour::alpha, Colour::beta, 3),
      doctest::Contains("VertexNotInSubgraph"), Error);
}

TEST_CASE("kempe_swap is a proper involution") {
  Graph c4 = make_named("C4");
  EdgeColouring alt(c4, {Colour::alpha, Colour::beta, Colour::beta,
                         Colour::alpha});
  KempeComponent comp = kempe_component_at(alt, Colour::alpha, Colour::beta, 0);
  EdgeColouring once = kempe_swap(alt, comp);
  CHECK(classify(once) == Properness::proper);
  CHECK(once.at(Edge(0, 1)) == Colour::beta);
  EdgeColouring twice = kempe_swap(once, comp);
  CHECK(twice == alt);

  // swapping a full (alpha,beta) path of a delta-minimum Petersen witness
  // leaves the delta class untouched
  EdgeColouring w = s_exact(make_named("PETERSEN")).witness;
  Edge d = colour_class(w, Colour::delta)[0];
  KempeComponent p = kempe_component_at(w, Colour::alpha, Colour::beta, d.u);
  EdgeColouring sw = kempe_swap(w, p);
  CHECK(classify(sw) == Properness::proper);
  CHECK(as_set(colour_class(sw, Colour::delta)) ==
        as_set(colour_class(w, Colour::delta)));

  // a component of a different colouring is stale
  EdgeColouring other(c4, {Colour::alpha, Colour::gamma, Colour::gamma,
                           Colour::alpha});
  CHECK_THROWS_WITH_AS(kempe_swap(other, comp), doctest::Contains("Stale"),
                       Error);
}

TEST_CASE("kempe components partition each two-colour subgraph") {
  std::mt19937 rng(20260810);
  for (int round = 0; round < 25; ++round) {
    Graph g = oracle::random_subcubic(8, 10, rng);
    EdgeColouring c = oracle::any_proper_four_colouring(g, rng);
    for (int xi = 0; xi < 4; ++xi)
      for (int yi = xi + 1; yi < 4; ++yi) {
        Colour x = static_cast<Colour>(xi), y = static_cast<Colour>(yi);
        std::set<Edge> covered;
        size_t expect = colour_class(c, x).size() + colour_class(c, y).size();
        for (int v : g.vertices()) {
          unsigned at = c.colours_at(v);
          if (!((at >> xi & 1) || (at >> yi & 1))) continue;
          KempeComponent comp = kempe_component_at(c, x, y, v);
          if (comp.is_cycle) CHECK(comp.vertices.size() % 2 == 0);
          for (size_t i = 0; i + 1 < comp.vertices.size(); ++i)
            covered.insert(Edge(comp.vertices[i], comp.vertices[i + 1]));
          if (comp.is_cycle)
            covered.insert(Edge(comp.vertices.front(), comp.vertices.back()));
        }
        CHECK(covered.size() == expect);
      }
  }
}

TEST_CASE("repair: stars, identity, all-delta Petersen") {
  EdgeColouring fixed = repair_delta_improper(colour_all(star3(), Colour::delta));
  CHECK(classify(fixed) == Properness::proper);
  CHECK(colour_class(fixed, Colour::delta).empty());

  Graph c3 = triangle();
  EdgeColouring proper(c3, {Colour::alpha, Colour::beta, Colour::gamma});
  CHECK(repair_delta_improper(proper) == proper);

  EdgeColouring invalid(c3, {Colour::alpha, Colour::alpha, Colour::beta});
  CHECK_THROWS_WITH_AS(repair_delta_improper(invalid),
                       doctest::Contains("InvalidColouring"), Error);

  Graph petersen = make_named("PETERSEN");
  EdgeColouring all_delta = colour_all(petersen, Colour::delta);
  EdgeColouring rep = repair_delta_improper(all_delta);
  CHECK(classify(rep) == Properness::proper);
  size_t nd = colour_class(rep, Colour::delta).size();
  CHECK(nd >= 2);
  CHECK(nd <= 15);
}

TEST_CASE("repair properties on random delta-improper colourings") {
  std::mt19937 rng(424242);
  for (int round = 0; round < 60; ++round) {
    int n = 4 + static_cast<int>(rng() % 9);  // up to 12
    Graph g = oracle::random_subcubic(n, std::min(12, 3 * n / 2), rng);
    if (g.edge_count() == 0) continue;
    EdgeColouring c = oracle::any_proper_four_colouring(g, rng);
    // delta-ify a random subset
    std::vector<Colour> by_edge = c.assignment();
    for (auto& t : by_edge)
      if (rng() % 3 == 0) t = Colour::delta;
    EdgeColouring improper(g, by_edge);
    REQUIRE(classify(improper) != Properness::invalid);

    EdgeColouring rep = repair_delta_improper(improper);
    CHECK(classify(rep) == Properness::proper);
    std::set<Edge> before = as_set(colour_class(improper, Colour::delta));
    for (Edge e : colour_class(rep, Colour::delta))
      CHECK(before.count(e) == 1);
    CHECK(colour_class(rep, Colour::delta).size() >=
          static_cast<size_t>(s_exact(g).s));
  }
}

TEST_CASE("repair reaches the alternating-path exchange") {
  // conflict at 0 with third edge coloured alpha and both far ends carrying
  // beta and gamma: no direct recolour exists, the exchange must fire
  Graph g = Graph::build(8, {{0, 1},
                             {0, 2},
                             {0, 3},
                             {1, 4},
                             {1, 5},
                             {2, 6},
                             {2, 7}});
  std::vector<Colour> by_edge(g.edge_count(), Colour::alpha);
  auto set = [&](int u, int v, Colour c) { by_edge[g.edge_index(Edge(u, v))] = c; };
  set(0, 1, Colour::delta);
  set(0, 2, Colour::delta);
  set(0, 3, Colour::alpha);
  set(1, 4, Colour::beta);
  set(1, 5, Colour::gamma);
  set(2, 6, Colour::beta);
  set(2, 7, Colour::gamma);
  EdgeColouring improper(g, by_edge);
  REQUIRE(classify(improper) == Properness::delta_improper);

  EdgeColouring rep = repair_delta_improper(improper);
  CHECK(classify(rep) == Properness::proper);
  // the exchange flipped the third edge and recoloured the lesser conflict
  // edge (its far end 1 is not the path endpoint 3)
  CHECK(rep.at(Edge(0, 3)) == Colour::beta);
  CHECK(rep.at(Edge(0, 1)) == Colour::alpha);
  for (Edge e : colour_class(rep, Colour::delta))
    CHECK((e == Edge(0, 1) || e == Edge(0, 2)));
}

TEST_CASE("repair's exchange avoids the path's far endpoint") {
  // the (alpha,beta) path from the conflict vertex ends at vertex 1, one of
  // the two conflict ends, so the other conflict edge must be recoloured
  Graph g = Graph::build(9, {{0, 1},
                             {0, 2},
                             {0, 3},
                             {3, 4},
                             {4, 5},
                             {1, 5},
                             {1, 8},
                             {2, 6},
                             {2, 7}});
  std::vector<Colour> by_edge(g.edge_count(), Colour::alpha);
  auto set = [&](int u, int v, Colour c) { by_edge[g.edge_index(Edge(u, v))] = c; };
  set(0, 1, Colour::delta);
  set(0, 2, Colour::delta);
  set(0, 3, Colour::alpha);
  set(3, 4, Colour::beta);
  set(4, 5, Colour::alpha);
  set(1, 5, Colour::beta);
  set(1, 8, Colour::gamma);
  set(2, 6, Colour::beta);
  set(2, 7, Colour::gamma);
  EdgeColouring improper(g, by_edge);
  REQUIRE(classify(improper) == Properness::delta_improper);

  EdgeColouring rep = repair_delta_improper(improper);
  CHECK(classify(rep) == Properness::proper);
  CHECK(rep.at(Edge(0, 2)) == Colour::alpha);   // the far-free conflict edge
  CHECK(rep.at(Edge(0, 3)) == Colour::beta);    // exchanged along the path
  CHECK(rep.at(Edge(1, 5)) == Colour::alpha);
  CHECK(rep.at(Edge(0, 1)) == Colour::delta);   // no colour frees this one
  CHECK(colour_class(rep, Colour::delta).size() == 1);
}

TEST_CASE("decide_three_colourable on the named graphs") {
  auto k4 = decide_three_colourable(make_named("K4"));
  REQUIRE(k4.has_value());
  CHECK(classify(*k4) == Properness::proper);
  CHECK(colour_class(*k4, Colour::delta).empty());

  CHECK_FALSE(decide_three_colourable(make_named("PETERSEN")).has_value());
  CHECK(decide_three_colourable(make_named("C5")).has_value());
}

TEST_CASE("decide_three_colourable agrees with exhaustive enumeration") {
  std::mt19937 rng(777);
  for (int round = 0; round < 50; ++round) {
    int n = 3 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_subcubic(n, std::min(12, 2 * n), rng);
    bool fast = decide_three_colourable(g).has_value();
    bool slow = oracle::enumerate_three_colourable(g);
    CHECK(fast == slow);
  }
  CHECK(oracle::enumerate_three_colourable(make_named("C5")));
  CHECK_FALSE(oracle::enumerate_three_colourable(make_named("G5")));
  CHECK(decide_three_colourable(make_named("G5")).has_value() == false);
}

TEST_CASE("search budget is enforced") {
  SearchBudget tiny{5};
  CHECK_THROWS_WITH_AS(decide_three_colourable(make_named("PETERSEN"), tiny),
                       doctest::Contains("BudgetExceeded"), Error);
}
