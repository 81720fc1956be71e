#include "pec/smin.hpp"

#include <algorithm>

namespace pec {

namespace {

// One component with minimum degree >= 2 (post pendant reduction).
// Returns (s, proper colouring of comp) with exactly s delta edges.
std::pair<int, EdgeColouring> solve_component(const Graph& comp,
                                              const SearchBudget& budget) {
  // deletion candidates: both ends of degree >= 2 (delta edges never have a
  // degree-1 end; vacuous after pendant reduction but kept as the guard)
  std::vector<Edge> cands;
  for (Edge e : comp.edges())
    if (comp.degree(e.u) >= 2 && comp.degree(e.v) >= 2) cands.push_back(e);

  int m = comp.edge_count();
  for (int k = 0; k <= m; ++k) {
    if (k > static_cast<int>(cands.size())) break;
    // colex enumeration over candidate indices: the largest index moves
    // slowest, so sets appear in colex order and the first hit is the
    // colex-least witness
    std::vector<int> idx(k);
    std::optional<EdgeColouring> found;
    auto rec = [&](auto&& self, int depth, int below) -> bool {
      if (depth == 0) {
        std::vector<Edge> del;
        for (int i : idx) del.push_back(cands[i]);
        auto three = decide_three_colourable(comp.without_edges(del), budget);
        if (!three) return false;
        found = three;
        return true;
      }
      for (int top = depth - 1; top <= below - 1; ++top) {
        idx[depth - 1] = top;
        if (self(self, depth - 1, top)) return true;
      }
      return false;
    };
    if (!rec(rec, k, static_cast<int>(cands.size()))) continue;

    // assemble: deleted edges get delta, the rest the 3-colouring
    std::vector<Colour> by_edge(m, Colour::delta);
    const Graph& rem = found->graph();
    for (int i = 0; i < m; ++i) {
      Edge e = comp.edges()[i];
      int j = rem.find_edge(e);
      if (j >= 0) by_edge[i] = found->at_index(j);
    }
    EdgeColouring witness = repair_delta_improper(
        EdgeColouring(comp, std::move(by_edge)));
    require(static_cast<int>(colour_class(witness, Colour::delta).size()) == k,
            Errc::invariant_violation,
            "repaired witness lost delta edges below the proven minimum");
    return {k, witness};
  }
  fail(Errc::invariant_violation, "no deletion set of any size succeeded");
}

// strip degree-1 vertices to a fixpoint; returns the removal order of
// pendant edges (leaf recorded first in each pair)
std::pair<Graph, std::vector<Edge>> strip_pendants(const Graph& g) {
  Graph core = g;
  std::vector<Edge> removed;
  while (true) {
    int leaf = -1;
    for (int v : core.vertices())
      if (core.degree(v) == 1) {
        leaf = v;
        break;
      }
    if (leaf < 0) break;
    int nbr = core.neighbours(leaf)[0];
    removed.emplace_back(leaf, nbr);
    core = core.without_vertex(leaf);
  }
  return {core, removed};
}

}  // namespace

SminResult s_exact(const Graph& g, const SearchBudget& budget) {
  require(g.edge_count() >= 1, Errc::empty_graph,
          "s(G) is undefined on an edgeless graph");

  auto [core, pendant_edges] = strip_pendants(g);

  std::vector<Colour> by_edge(g.edge_count(), Colour::alpha);
  int total_s = 0;
  for (const Graph& comp : core.components()) {
    if (comp.edge_count() == 0) continue;
    auto [s_comp, witness] = solve_component(comp, budget);
    total_s += s_comp;
    for (int i = 0; i < comp.edge_count(); ++i) {
      Edge e = comp.edges()[i];
      by_edge[g.edge_index(e)] = witness.at_index(i);
    }
  }

  // lift pendant edges in reverse removal order; a pendant edge sees at most
  // two coloured edges at its internal end, so delta is never needed
  EdgeColouring witness(g, std::move(by_edge));
  std::vector<bool> edge_live(g.edge_count(), false);
  for (Edge e : core.edges()) edge_live[g.edge_index(e)] = true;
  for (auto it = pendant_edges.rbegin(); it != pendant_edges.rend(); ++it) {
    Edge e = *it;
    unsigned blocked = 0;
    for (int w : {e.u, e.v})
      for (int u : g.neighbours(w)) {
        Edge f(w, u);
        if (f != e && edge_live[g.edge_index(f)])
          blocked |= 1u << static_cast<int>(witness.at(f));
      }
    unsigned free = 0b0111 & ~blocked;
    require(free != 0, Errc::invariant_violation,
            "pendant lift found no free colour");
    witness = witness.with(e, static_cast<Colour>(__builtin_ctz(free)));
    edge_live[g.edge_index(e)] = true;
  }

  require(classify(witness) == Properness::proper, Errc::invariant_violation,
          "assembled witness is not proper");
  int s = total_s;
  int m = g.edge_count();
  require(static_cast<int>(colour_class(witness, Colour::delta).size()) == s,
          Errc::invariant_violation, "witness delta class does not match s");

  SminResult out{s, m - s, Rational(m - s, m), std::move(witness)};
  return out;
}

std::pair<int, EdgeColouring> s_upper_from_vertices(
    const Graph& g, const std::vector<int>& vs, const SearchBudget& budget) {
  Graph rem = g.without_vertices(vs);
  auto three = decide_three_colourable(rem, budget);
  require(three.has_value(), Errc::not_three_colourable_remainder,
          "graph minus the vertex set is not 3-edge-colourable");

  uint64_t removed_mask = 0;
  for (int v : vs) removed_mask |= uint64_t{1} << v;
  std::vector<Colour> by_edge(g.edge_count(), Colour::delta);
  for (int i = 0; i < g.edge_count(); ++i) {
    Edge e = g.edges()[i];
    if ((removed_mask >> e.u & 1) || (removed_mask >> e.v & 1)) continue;
    by_edge[i] = three->at(e);
  }
  EdgeColouring repaired =
      repair_delta_improper(EdgeColouring(g, std::move(by_edge)));
  int bound = static_cast<int>(colour_class(repaired, Colour::delta).size());
  return {bound, repaired};
}

Rational gamma(const Graph& g, const SearchBudget& budget) {
  return s_exact(g, budget).gamma;
}

}  // namespace pec
