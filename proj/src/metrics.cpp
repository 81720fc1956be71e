#include "pec/metrics.hpp"

#include <algorithm>

#include "pec/constructions.hpp"

namespace pec {

const char* extremal_name(ExtremalClass e) {
  switch (e) {
    case ExtremalClass::not_extremal: return "NOT_EXTREMAL";
    case ExtremalClass::petersen: return "PETERSEN";
    case ExtremalClass::p_prime: return "P_PRIME";
    case ExtremalClass::g5_exception: return "G5_EXCEPTION";
  }
  return "?";
}

namespace {

BoundEval evaluate(const std::string& name, const Rational& gamma,
                   const Rational& rhs) {
  BoundEval b;
  b.name = name;
  b.rhs = rhs;
  b.state = gamma >= rhs ? BoundEval::State::satisfied
                         : BoundEval::State::violated;
  if (b.state == BoundEval::State::satisfied && gamma == rhs)
    b.note = "equality";
  return b;
}

BoundEval skipped(const std::string& name, const std::string& why) {
  BoundEval b;
  b.name = name;
  b.state = BoundEval::State::skipped;
  b.note = why;
  return b;
}

bool has_reducible_triangle(const Graph& g) {
  std::vector<int> vs = g.vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      for (size_t k = j + 1; k < vs.size(); ++k) {
        if (!g.has_edge(vs[i], vs[j]) || !g.has_edge(vs[j], vs[k]) ||
            !g.has_edge(vs[i], vs[k]))
          continue;
        try {
          reduce_triangle(g, {vs[i], vs[j], vs[k]});
          return true;
        } catch (const Error& e) {
          if (e.code() != Errc::not_reducible) throw;
        }
      }
  return false;
}

}  // namespace

MetricsReport bound_suite(const Graph& g, const SearchBudget& budget,
                          bool opt_in_large) {
  require(g.edge_count() >= 1, Errc::empty_graph,
          "metrics need at least one edge");

  MetricsReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.v2_count = g.degree_count(2);
  r.v3_count = g.degree_count(3);

  SminResult sr = s_exact(g, budget);
  r.s = sr.s;
  r.gamma = sr.gamma;
  r.odd_girth = odd_girth(g);

  std::vector<TwoFactor> factors;
  bool factors_known = false;
  std::string factor_skip;
  try {
    factors = enumerate_two_factors(g, opt_in_large);
    factors_known = true;
  } catch (const Error& e) {
    if (e.code() == Errc::no_two_factor) {
      factor_skip = "no 2-factor";
      r.oddness = FactorStat::undefined();
      r.g_plus = FactorStat::undefined();
    } else if (e.code() == Errc::budget_exceeded) {
      factor_skip = "2-factor enumeration needs the large-graph opt-in";
      r.oddness = FactorStat::budget();
      r.g_plus = FactorStat::budget();
    } else {
      throw;
    }
  }
  if (factors_known) {
    int odd = kInfiniteLength;
    int best_len = 0;
    bool inf = false;
    for (const TwoFactor& f : factors) {
      odd = std::min(odd, f.odd_cycle_count());
      int len = f.min_odd_cycle_length();
      if (len == kInfiniteLength)
        inf = true;
      else
        best_len = std::max(best_len, len);
    }
    r.oddness = FactorStat::of(odd);
    r.g_plus = inf ? FactorStat::infinite() : FactorStat::of(best_len);
  }

  // gamma >= 1 - 2/(3 g_odd); bipartite graphs get rhs = 1
  {
    Rational rhs = r.odd_girth == kInfiniteLength
                       ? Rational(1)
                       : Rational(1) - Rational(2, 3LL * r.odd_girth);
    r.bounds.push_back(evaluate("odd_girth_bound", r.gamma, rhs));
  }

  // gamma >= 1 - (2/15)/(1 + (2/3)|V2|/|V3|), unless the graph is G5
  {
    if (r.v3_count == 0)
      r.bounds.push_back(skipped("degree_ratio_bound", "no degree-3 vertices"));
    else if (are_isomorphic(g, make_named("G5")))
      r.bounds.push_back(skipped("degree_ratio_bound", "the G5 exception"));
    else {
      Rational denom =
          Rational(1) + Rational(2, 3) * Rational(r.v2_count, r.v3_count);
      Rational rhs = Rational(1) - Rational(2, 15) / denom;
      r.bounds.push_back(evaluate("degree_ratio_bound", r.gamma, rhs));
    }
  }

  // gamma >= 1 - 2n/((3n - |V2|) g+)
  {
    const char* name = "gplus_bound";
    bool min_deg2 = g.degree_count(0) == 0 && g.degree_count(1) == 0;
    if (!min_deg2)
      r.bounds.push_back(skipped(name, "vertices of degree below 2"));
    else if (r.g_plus.kind == FactorStat::Kind::undefined)
      r.bounds.push_back(skipped(name, "no 2-factor"));
    else if (r.g_plus.kind == FactorStat::Kind::budget_exceeded)
      r.bounds.push_back(skipped(name, factor_skip));
    else {
      Rational rhs =
          r.g_plus.kind == FactorStat::Kind::infinite
              ? Rational(1)
              : Rational(1) - Rational(2LL * r.n,
                                       (3LL * r.n - r.v2_count) *
                                           r.g_plus.value);
      r.bounds.push_back(evaluate(name, r.gamma, rhs));
    }
  }

  // gamma >= max{1 - 3/(4 g+), 11/12} when |V2| <= n/3 and g+ >= 11
  {
    const char* name = "gplus_eleven_twelfths_bound";
    bool min_deg2 = g.degree_count(0) == 0 && g.degree_count(1) == 0;
    bool gplus_ok = r.g_plus.kind == FactorStat::Kind::infinite ||
                    (r.g_plus.kind == FactorStat::Kind::value &&
                     r.g_plus.value >= 11);
    if (!min_deg2)
      r.bounds.push_back(skipped(name, "vertices of degree below 2"));
    else if (r.g_plus.kind == FactorStat::Kind::undefined)
      r.bounds.push_back(skipped(name, "no 2-factor"));
    else if (r.g_plus.kind == FactorStat::Kind::budget_exceeded)
      r.bounds.push_back(skipped(name, factor_skip));
    else if (3LL * r.v2_count > r.n)
      r.bounds.push_back(skipped(name, "|V2| > n/3"));
    else if (!gplus_ok)
      r.bounds.push_back(skipped(name, "g+ below 11"));
    else {
      Rational first = r.g_plus.kind == FactorStat::Kind::infinite
                           ? Rational(1)
                           : Rational(1) - Rational(3, 4LL * r.g_plus.value);
      Rational rhs = std::max(first, Rational(11, 12));
      r.bounds.push_back(evaluate(name, r.gamma, rhs));
    }
  }

  // every 2-factor contains at least s(G) disjoint odd cycles
  {
    const char* name = "factor_odd_cycle_floor";
    if (!factors_known && r.oddness.kind == FactorStat::Kind::budget_exceeded)
      r.bounds.push_back(skipped(name, factor_skip));
    else if (!factors_known) {
      BoundEval b;
      b.name = name;
      b.state = BoundEval::State::satisfied;
      b.rhs = Rational(r.s);
      b.note = "vacuous: no 2-factor";
      r.bounds.push_back(b);
    } else {
      bool ok = true;
      for (const TwoFactor& f : factors) ok = ok && f.odd_cycle_count() >= r.s;
      BoundEval b;
      b.name = name;
      b.state =
          ok ? BoundEval::State::satisfied : BoundEval::State::violated;
      b.rhs = Rational(r.s);
      r.bounds.push_back(b);
    }
  }

  r.extremal = g.is_connected() ? extremal_recognize(g, budget)
                                : ExtremalClass::not_extremal;
  return r;
}

CheckResult verify_c5_factor_lemma(const Graph& g, const SearchBudget& budget,
                                   bool opt_in_large) {
  require(g.is_cubic(), Errc::precondition_failed, "graph is not cubic");
  require(!has_reducible_triangle(g), Errc::precondition_failed,
          "graph has a reducible triangle");
  int s = s_exact(g, budget).s;
  std::vector<TwoFactor> factors = enumerate_two_factors(g, opt_in_large);
  bool c5_factored = false;
  for (const TwoFactor& f : factors) {
    bool all5 = std::all_of(f.cycles.begin(), f.cycles.end(),
                            [](const auto& c) { return c.size() == 5; });
    if (all5 && static_cast<int>(f.cycles.size()) == s) c5_factored = true;
  }
  require(c5_factored, Errc::precondition_failed,
          "no 2-factor of exactly s(G) five-cycles");

  for (const TwoFactor& f : factors) {
    bool all5 = std::all_of(f.cycles.begin(), f.cycles.end(),
                            [](const auto& c) { return c.size() == 5; });
    if (!all5 || static_cast<int>(f.cycles.size()) != s)
      return check_fail("c5_factor_uniformity",
                        "a 2-factor deviates from s(G) five-cycles");
  }
  return check_pass("c5_factor_uniformity",
                    std::to_string(factors.size()) + " factors, each " +
                        std::to_string(s) + " five-cycles");
}

CheckResult permutation_graph_check(const Graph& g, const SearchBudget& budget,
                                    bool opt_in_large) {
  require(g.is_cubic(), Errc::precondition_failed, "graph is not cubic");
  int s = s_exact(g, budget).s;
  std::vector<TwoFactor> factors = enumerate_two_factors(g, opt_in_large);

  auto qualifying = [&](const TwoFactor& f) {
    if (static_cast<int>(f.cycles.size()) != s) return false;
    for (const auto& c : f.cycles) {
      if (c.size() % 2 == 0 || c.size() < 5) return false;
      if (induced_edge_count(g, c) != static_cast<int>(c.size()))
        return false;  // chord: not induced
    }
    return true;
  };

  bool any = false;
  for (const TwoFactor& f : factors) {
    if (!qualifying(f)) continue;
    any = true;
    if (f.cycles.size() != 2)
      return check_fail("permutation_graph",
                        "qualifying factor has " +
                            std::to_string(f.cycles.size()) + " cycles");
    if (f.cycles[0].size() != f.cycles[1].size())
      return check_fail("permutation_graph",
                        "qualifying factor cycles differ in length");
  }
  require(any, Errc::precondition_failed,
          "no 2-factor of s(G) induced odd cycles of length >= 5");

  if (girth(g) == 5) {
    if (!are_isomorphic(g, make_named("PETERSEN")))
      return check_fail("permutation_graph",
                        "girth 5 but not the Petersen graph");
    return check_pass("permutation_graph",
                      "permutation graph; girth 5 forces the Petersen graph");
  }
  return check_pass("permutation_graph", "permutation graph");
}

ExtremalClass extremal_recognize(const Graph& g, const SearchBudget& budget) {
  require(g.is_connected(), Errc::precondition_failed,
          "extremal recognition needs a connected graph");
  require(g.edge_count() >= 1, Errc::empty_graph, "graph has no edges");
  if (are_isomorphic(g, make_named("G5"))) return ExtremalClass::g5_exception;
  Rational gm = s_exact(g, budget).gamma;
  if (gm != Rational(13, 15)) return ExtremalClass::not_extremal;
  if (are_isomorphic(g, make_named("PETERSEN"))) return ExtremalClass::petersen;
  if (are_isomorphic(g, make_named("P_PRIME"))) return ExtremalClass::p_prime;
  fail(Errc::invariant_violation,
       "gamma = 13/15 on a connected graph that is neither extremal witness");
}

}  // namespace pec
