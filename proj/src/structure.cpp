#include "pec/structure.hpp"

#include <algorithm>
#include <set>

namespace pec {

namespace {

constexpr int kSetCount = 3;

// set index -> colour pair, in the fixed probe order
constexpr Colour kPairX[kSetCount] = {Colour::alpha, Colour::beta,
                                      Colour::alpha};
constexpr Colour kPairY[kSetCount] = {Colour::beta, Colour::gamma,
                                      Colour::gamma};

Colour third_colour(Colour x, Colour y) {
  for (Colour t : {Colour::alpha, Colour::beta, Colour::gamma})
    if (t != x && t != y) return t;
  fail(Errc::invariant_violation, "no third colour");
}

std::vector<Edge> cycle_edge_list(const std::vector<int>& cyc) {
  std::vector<Edge> out;
  for (size_t i = 0; i + 1 < cyc.size(); ++i) out.emplace_back(cyc[i], cyc[i + 1]);
  if (cyc.size() >= 3) out.emplace_back(cyc.back(), cyc.front());
  return out;
}

uint64_t vertex_mask_of(const std::vector<int>& vs) {
  uint64_t m = 0;
  for (int v : vs) m |= uint64_t{1} << v;
  return m;
}

// Check that cert describes c: the delta edge is delta, the path edges
// alternate the pair's colours, and every outside edge incident to the
// cycle carries the pair's third colour.
void validate_certificate(const EdgeColouring& c,
                          const OddCycleCertificate& cert) {
  const Graph& g = c.graph();
  require(cert.cycle.size() >= 3 && cert.cycle.size() % 2 == 1,
          Errc::invariant_violation, "certificate cycle must be odd");
  require(Edge(cert.cycle.front(), cert.cycle.back()) == cert.delta_edge,
          Errc::invariant_violation,
          "certificate cycle does not close on its delta edge");
  require(c.at(cert.delta_edge) == Colour::delta, Errc::invariant_violation,
          "certificate delta edge is not coloured delta");
  for (size_t i = 0; i + 1 < cert.cycle.size(); ++i) {
    Colour t = c.at(Edge(cert.cycle[i], cert.cycle[i + 1]));
    require(t == cert.x || t == cert.y, Errc::invariant_violation,
            "certificate path leaves the colour pair");
  }
  // every edge incident to the cycle but not on it (chords included) must
  // carry the pair's third colour
  Colour z = third_colour(cert.x, cert.y);
  std::set<Edge> ring;
  for (Edge e : cycle_edge_list(cert.cycle)) ring.insert(e);
  for (int w : cert.cycle)
    for (int u : g.neighbours(w)) {
      Edge e(w, u);
      if (ring.count(e)) continue;
      require(c.at(e) == z, Errc::not_delta_minimum_evidence,
              "edge " + e.str() +
                  " incident to a certificate cycle is not the third colour");
    }
}

}  // namespace

std::vector<Edge> DeltaClassPartition::delta_edges() const {
  std::vector<Edge> out;
  for (const auto& [e, certs] : certificates) out.push_back(e);
  return out;
}

std::vector<OddCycleCertificate> DeltaClassPartition::all_certificates() const {
  std::vector<OddCycleCertificate> out;
  for (const auto& [e, certs] : certificates)
    out.insert(out.end(), certs.begin(), certs.end());
  return out;
}

std::vector<int> DeltaClassPartition::sets_of(Edge e) const {
  std::vector<int> out;
  if (std::find(a_set.begin(), a_set.end(), e) != a_set.end()) out.push_back(0);
  if (std::find(b_set.begin(), b_set.end(), e) != b_set.end()) out.push_back(1);
  if (std::find(c_set.begin(), c_set.end(), e) != c_set.end()) out.push_back(2);
  return out;
}

DeltaClassPartition classify_delta_edges(const EdgeColouring& c) {
  require(classify(c) == Properness::proper, Errc::invalid_colouring,
          "certificates are defined on proper colourings");
  DeltaClassPartition part;
  for (Edge e : colour_class(c, Colour::delta)) {
    std::vector<OddCycleCertificate> certs;
    for (int s = 0; s < kSetCount; ++s) {
      Colour x = kPairX[s], y = kPairY[s];
      unsigned at_u = c.colours_at(e.u);
      bool touches = (at_u >> static_cast<int>(x) & 1) ||
                     (at_u >> static_cast<int>(y) & 1);
      if (!touches) continue;
      KempeComponent comp = kempe_component_at(c, x, y, e.u);
      if (comp.is_cycle) continue;
      const std::vector<int>& vs = comp.vertices;
      bool joins = (vs.front() == e.u && vs.back() == e.v) ||
                   (vs.front() == e.v && vs.back() == e.u);
      if (!joins) continue;
      if (vs.size() % 2 == 0) continue;  // odd edge count: not an even path
      OddCycleCertificate cert;
      cert.delta_edge = e;
      cert.x = x;
      cert.y = y;
      cert.cycle = vs;
      if (cert.cycle.front() != e.u)
        std::reverse(cert.cycle.begin(), cert.cycle.end());
      certs.push_back(cert);
      (s == 0 ? part.a_set : s == 1 ? part.b_set : part.c_set).push_back(e);
    }
    require(!certs.empty(), Errc::not_delta_minimum_evidence,
            "delta edge " + e.str() +
                " has no alternating even path between its ends");
    part.certificates[e] = std::move(certs);
  }
  std::sort(part.a_set.begin(), part.a_set.end());
  std::sort(part.b_set.begin(), part.b_set.end());
  std::sort(part.c_set.begin(), part.c_set.end());
  return part;
}

EdgeColouring rotate_delta_edge(const EdgeColouring& c,
                                const OddCycleCertificate& cert, Edge target) {
  validate_certificate(c, cert);
  std::vector<Edge> ring = cycle_edge_list(cert.cycle);
  int pos_target = -1, pos_delta = -1;
  for (size_t i = 0; i < ring.size(); ++i) {
    if (ring[i] == target) pos_target = static_cast<int>(i);
    if (ring[i] == cert.delta_edge) pos_delta = static_cast<int>(i);
  }
  require(pos_target >= 0, Errc::target_not_on_cycle,
          "edge " + target.str() + " is not on the certificate cycle");
  require(pos_delta >= 0, Errc::invariant_violation,
          "certificate delta edge is not on its own cycle");

  // Step the delta colour along the ring, each step exchanging the delta
  // edge's colour with its neighbour's; every intermediate state is proper.
  // The shorter arc is taken (lengths differ: the ring is odd), which makes
  // rotating back an exact inverse.
  EdgeColouring cur = c;
  int len = static_cast<int>(ring.size());
  int forward = (pos_target - pos_delta + len) % len;
  if (forward <= len - forward) {
    for (int i = pos_delta; i != pos_target; i = (i + 1) % len) {
      Edge here = ring[i], next = ring[(i + 1) % len];
      Colour t = cur.at(next);
      cur = cur.with(here, t).with(next, Colour::delta);
    }
  } else {
    for (int i = pos_delta; i != pos_target; i = (i + len - 1) % len) {
      Edge here = ring[i], prev = ring[(i + len - 1) % len];
      Colour t = cur.at(prev);
      cur = cur.with(here, t).with(prev, Colour::delta);
    }
  }
  return cur;
}

std::vector<CheckResult> verify_structure(const EdgeColouring& c,
                                          const DeltaClassPartition& p) {
  const Graph& g = c.graph();
  std::vector<CheckResult> out;
  std::vector<Edge> deltas = p.delta_edges();

  // every delta edge touches alpha, beta and gamma
  {
    std::string bad;
    for (Edge e : deltas) {
      unsigned seen = (c.colours_at(e.u) | c.colours_at(e.v)) & 0b0111;
      if (seen != 0b0111) {
        bad = "delta edge " + e.str() + " misses a colour";
        break;
      }
    }
    out.push_back(bad.empty() ? check_pass("delta_edge_colour_contact")
                              : check_fail("delta_edge_colour_contact", bad));
  }

  // end degrees are (2,3) or (3,3)
  {
    std::string bad;
    for (Edge e : deltas) {
      int lo = std::min(g.degree(e.u), g.degree(e.v));
      int hi = std::max(g.degree(e.u), g.degree(e.v));
      if (!(hi == 3 && (lo == 2 || lo == 3))) {
        bad = "delta edge " + e.str() + " has end degrees (" +
              std::to_string(lo) + "," + std::to_string(hi) + ")";
        break;
      }
    }
    out.push_back(bad.empty() ? check_pass("delta_edge_end_degrees")
                              : check_fail("delta_edge_end_degrees", bad));
  }

  // an edge lies in two sets iff it has a degree-2 end
  {
    std::string bad;
    for (Edge e : deltas) {
      bool deg2 = g.degree(e.u) == 2 || g.degree(e.v) == 2;
      size_t nsets = p.sets_of(e).size();
      if ((nsets == 2) != deg2 || nsets == 0 || nsets == 3) {
        bad = "delta edge " + e.str() + " lies in " + std::to_string(nsets) +
              " sets with degree-2 end = " + (deg2 ? "yes" : "no");
        break;
      }
    }
    out.push_back(bad.empty()
                      ? check_pass("two_set_membership_iff_degree2_end")
                      : check_fail("two_set_membership_iff_degree2_end", bad));
  }

  // no two consecutive degree-2 vertices on any certificate cycle
  {
    std::string bad;
    for (const auto& cert : p.all_certificates()) {
      const auto& cyc = cert.cycle;
      for (size_t i = 0; i < cyc.size() && bad.empty(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (g.degree(a) == 2 && g.degree(b) == 2)
          bad = "cycle of " + cert.delta_edge.str() +
                " has consecutive degree-2 vertices " + std::to_string(a) +
                "," + std::to_string(b);
      }
    }
    out.push_back(bad.empty()
                      ? check_pass("no_consecutive_degree2_on_cycle")
                      : check_fail("no_consecutive_degree2_on_cycle", bad));
  }

  // cycles of distinct delta edges are vertex-disjoint
  {
    std::string bad;
    for (size_t i = 0; i < deltas.size() && bad.empty(); ++i)
      for (size_t j = i + 1; j < deltas.size() && bad.empty(); ++j)
        for (const auto& c1 : p.certificates.at(deltas[i]))
          for (const auto& c2 : p.certificates.at(deltas[j]))
            if (vertex_mask_of(c1.cycle) & vertex_mask_of(c2.cycle)) {
              bad = "cycles of " + deltas[i].str() + " and " +
                    deltas[j].str() + " share a vertex";
            }
    out.push_back(bad.empty() ? check_pass("certificate_cycles_disjoint")
                              : check_fail("certificate_cycles_disjoint", bad));
  }

  // a degree-2-ended delta edge: the degree-3 end has exactly one degree-2
  // neighbour, and the edge induces a 2K2 with every other delta edge
  {
    std::string bad;
    for (Edge e : deltas) {
      int d2 = g.degree(e.u) == 2 ? e.u : g.degree(e.v) == 2 ? e.v : -1;
      if (d2 < 0) continue;
      int u = e.other(d2);
      int deg2_nbrs = 0;
      for (int w : g.neighbours(u)) deg2_nbrs += g.degree(w) == 2;
      if (deg2_nbrs != 1) {
        bad = "degree-3 end of " + e.str() + " has " +
              std::to_string(deg2_nbrs) + " degree-2 neighbours";
        break;
      }
      for (Edge f : deltas) {
        if (f == e) continue;
        if (induced_edge_count(g, std::vector<int>{e.u, e.v, f.u, f.v}) != 2) {
          bad = e.str() + " and " + f.str() + " do not induce a 2K2";
          break;
        }
      }
      if (!bad.empty()) break;
    }
    out.push_back(bad.empty() ? check_pass("degree2_delta_edge_isolation")
                              : check_fail("degree2_delta_edge_isolation", bad));
  }

  // pairs confined to one common set are joined by at most one edge;
  // all other pairs induce a 2K2
  {
    std::string bad;
    for (size_t i = 0; i < deltas.size() && bad.empty(); ++i)
      for (size_t j = i + 1; j < deltas.size() && bad.empty(); ++j) {
        Edge e1 = deltas[i], e2 = deltas[j];
        auto s1 = p.sets_of(e1), s2 = p.sets_of(e2);
        int between =
            induced_edge_count(g, std::vector<int>{e1.u, e1.v, e2.u, e2.v}) - 2;
        bool same_single = s1.size() == 1 && s2.size() == 1 && s1[0] == s2[0];
        if (same_single ? between > 1 : between != 0)
          bad = e1.str() + " and " + e2.str() + " joined by " +
                std::to_string(between) + " edges";
      }
    out.push_back(bad.empty() ? check_pass("delta_pair_induced_bound")
                              : check_fail("delta_pair_induced_bound", bad));
  }

  // three same-set delta edges induce at most four edges
  {
    std::string bad;
    for (const auto* set : {&p.a_set, &p.b_set, &p.c_set}) {
      const auto& s = *set;
      for (size_t i = 0; i < s.size() && bad.empty(); ++i)
        for (size_t j = i + 1; j < s.size() && bad.empty(); ++j)
          for (size_t k = j + 1; k < s.size() && bad.empty(); ++k) {
            std::vector<int> ends{s[i].u, s[i].v, s[j].u,
                                  s[j].v, s[k].u, s[k].v};
            if (induced_edge_count(g, ends) > 4)
              bad = "triple " + s[i].str() + "," + s[j].str() + "," +
                    s[k].str() + " induces more than four edges";
          }
      if (!bad.empty()) break;
    }
    out.push_back(bad.empty() ? check_pass("same_set_triple_edge_bound")
                              : check_fail("same_set_triple_edge_bound", bad));
  }

  return out;
}

std::vector<CheckResult> verify_same_set_trichotomy(
    const Graph& g, const EdgeColouring& c, const DeltaClassPartition& p) {
  require(g == c.graph(), Errc::invariant_violation,
          "colouring is over a different graph");
  require(g.is_cubic(), Errc::precondition_not_spanning,
          "trichotomy needs a cubic graph");
  require(p.b_set.empty() && p.c_set.empty(), Errc::precondition_not_spanning,
          "trichotomy needs all delta edges in the (alpha,beta) set");
  uint64_t covered = 0;
  for (const auto& cert : p.all_certificates())
    covered |= vertex_mask_of(cert.cycle);
  require(covered == g.vertex_mask(), Errc::precondition_not_spanning,
          "certificate cycles do not span the graph");

  std::vector<CheckResult> out;
  auto certs = p.all_certificates();
  for (size_t i = 0; i < certs.size(); ++i)
    for (size_t j = i + 1; j < certs.size(); ++j) {
      const auto& c1 = certs[i];
      const auto& c2 = certs[j];
      std::string label = "cycle_pair_trichotomy[" + c1.delta_edge.str() +
                          " vs " + c2.delta_edge.str() + "]";
      int dist;
      try {
        dist = edge_set_distance(g, cycle_edge_list(c1.cycle),
                                 cycle_edge_list(c2.cycle));
      } catch (const Error&) {
        out.push_back(check_fail(label, "cycles are not vertex-disjoint"));
        continue;
      }
      if (dist >= 2) {
        out.push_back(check_pass(label, "distance >= 2"));
        continue;
      }
      uint64_t m1 = vertex_mask_of(c1.cycle), m2 = vertex_mask_of(c2.cycle);
      int joining = 0;
      for (Edge e : g.edges())
        joining += ((m1 >> e.u & 1) && (m2 >> e.v & 1)) ||
                   ((m2 >> e.u & 1) && (m1 >> e.v & 1));
      if (joining >= 3) {
        out.push_back(
            check_pass(label, std::to_string(joining) + " joining edges"));
        continue;
      }
      auto chord_count = [&](const OddCycleCertificate& cert) {
        return induced_edge_count(g, cert.cycle) -
               static_cast<int>(cert.cycle.size());
      };
      if (chord_count(c1) >= 2 && chord_count(c2) >= 2) {
        out.push_back(check_pass(label, "two chords on each cycle"));
        continue;
      }
      out.push_back(check_fail(
          label, "distance " + std::to_string(dist) + ", " +
                     std::to_string(joining) + " joining edges, chords " +
                     std::to_string(chord_count(c1)) + "/" +
                     std::to_string(chord_count(c2))));
    }
  if (out.empty())
    out.push_back(check_pass("cycle_pair_trichotomy", "fewer than two cycles"));
  return out;
}

EdgeColouring payan_strong_matching(const Graph& g, const EdgeColouring& c) {
  require(g == c.graph(), Errc::invariant_violation,
          "colouring is over a different graph");
  if (colour_class(c, Colour::delta).empty()) return c;

  EdgeColouring cur = c;
  std::set<Edge> fixed_global;
  for (int s = 0; s < kSetCount; ++s) {
    std::set<Edge> fixed_in_set;
    while (true) {
      DeltaClassPartition part = classify_delta_edges(cur);
      const std::vector<Edge>& set_edges =
          s == 0 ? part.a_set : s == 1 ? part.b_set : part.c_set;
      Edge next{};
      bool have = false;
      for (Edge e : set_edges)
        if (!fixed_global.count(e)) {
          next = e;
          have = true;
          break;
        }
      if (!have) break;

      // the certificate for this set's colour pair
      const OddCycleCertificate* cert = nullptr;
      for (const auto& cand : part.certificates.at(next))
        if (cand.x == kPairX[s] && cand.y == kPairY[s]) cert = &cand;
      require(cert != nullptr, Errc::invariant_violation,
              "set member lost its certificate");

      // mark the cycle: a degree-3 vertex gets '+' when its third-colour
      // edge (the one not on the cycle; possibly a chord) reaches an
      // endpoint of a delta edge already fixed while processing this set
      uint64_t fixed_ends = 0;
      for (Edge f : fixed_in_set)
        fixed_ends |= uint64_t{1} << f.u | uint64_t{1} << f.v;
      const auto& cyc = cert->cycle;
      int len = static_cast<int>(cyc.size());
      std::set<Edge> ring;
      for (Edge e : cycle_edge_list(cyc)) ring.insert(e);
      std::vector<bool> minus(len, false);
      for (int i = 0; i < len; ++i) {
        int w = cyc[i];
        if (g.degree(w) != 3) continue;  // degree-2: never a rotation end
        int off = -1;
        for (int u : g.neighbours(w))
          if (!ring.count(Edge(w, u))) off = u;
        require(off >= 0, Errc::invariant_violation,
                "degree-3 cycle vertex with all edges on the cycle");
        minus[i] = !(fixed_ends >> off & 1);
      }

      // least-id consecutive '--' pair of degree-3 vertices
      int best = -1;
      auto better = [&](int i, int j) {
        auto key = [&](int k) {
          int a = cyc[k], b = cyc[(k + 1) % len];
          return std::pair(std::min(a, b), std::max(a, b));
        };
        return key(i) < key(j);
      };
      for (int i = 0; i < len; ++i) {
        int j = (i + 1) % len;
        if (g.degree(cyc[i]) != 3 || g.degree(cyc[j]) != 3) continue;
        if (!minus[i] || !minus[j]) continue;
        if (best < 0 || better(i, best)) best = i;
      }
      require(best >= 0, Errc::no_consecutive_minus_pair,
              "no consecutive '-' pair of degree-3 vertices on the cycle of " +
                  next.str());

      Edge landing(cyc[best], cyc[(best + 1) % len]);
      cur = rotate_delta_edge(cur, *cert, landing);
      fixed_in_set.insert(landing);
      fixed_global.insert(landing);
    }
  }

  return cur;
}

std::vector<int> independent_cover(const Graph& g, const EdgeColouring& c,
                                   const SearchBudget& budget) {
  require(g == c.graph(), Errc::invariant_violation,
          "colouring is over a different graph");
  std::vector<Edge> deltas = colour_class(c, Colour::delta);
  std::vector<int> cover;
  for (Edge e : deltas) cover.push_back(std::min(e.u, e.v));

  // the postconditions are theorems for a strong-matching witness; verify
  for (int v : cover)
    require(g.degree(v) == 3, Errc::invariant_violation,
            "cover vertex " + std::to_string(v) + " has degree below 3");
  for (size_t i = 0; i < cover.size(); ++i)
    for (size_t j = i + 1; j < cover.size(); ++j)
      require(!g.has_edge(cover[i], cover[j]), Errc::invariant_violation,
              "cover vertices are adjacent");
  require(decide_three_colourable(g.without_vertices(cover), budget).has_value(),
          Errc::invariant_violation,
          "graph minus the cover is not 3-edge-colourable");
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace pec
