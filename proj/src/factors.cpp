#include "pec/factors.hpp"

#include <algorithm>

namespace pec {

int TwoFactor::odd_cycle_count() const {
  int count = 0;
  for (const auto& c : cycles) count += c.size() % 2;
  return count;
}

int TwoFactor::min_odd_cycle_length() const {
  int best = kInfiniteLength;
  for (const auto& c : cycles)
    if (c.size() % 2) best = std::min(best, static_cast<int>(c.size()));
  return best;
}

namespace {

// split a 2-regular edge set into cycles, least vertex first, least
// neighbour first
std::vector<std::vector<int>> cycles_of(const Graph& g,
                                        const std::vector<uint64_t>& adj) {
  std::vector<std::vector<int>> out;
  uint64_t todo = g.vertex_mask();
  while (todo) {
    int start = __builtin_ctzll(todo);
    std::vector<int> cyc{start};
    int prev = -1, cur = start;
    while (true) {
      uint64_t nbrs = adj[cur];
      if (prev >= 0) nbrs &= ~(uint64_t{1} << prev);
      int next = __builtin_ctzll(nbrs);
      if (next == start) break;
      cyc.push_back(next);
      prev = cur;
      cur = next;
    }
    for (int v : cyc) todo &= ~(uint64_t{1} << v);
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

std::vector<TwoFactor> enumerate_two_factors(const Graph& g,
                                             bool opt_in_large) {
  require(g.vertex_count() > 0, Errc::no_two_factor, "empty graph");
  require(g.vertex_count() <= 24 || opt_in_large, Errc::budget_exceeded,
          "2-factor enumeration above 24 vertices needs the opt-in flag");
  for (int v : g.vertices())
    require(g.degree(v) >= 2, Errc::no_two_factor,
            "vertex " + std::to_string(v) + " has degree below 2");

  // remove a perfect matching on the degree-3 vertices
  uint64_t v3 = 0;
  for (int v : g.vertices())
    if (g.degree(v) == 3) v3 |= uint64_t{1} << v;

  std::vector<TwoFactor> out;
  std::vector<Edge> removed;
  auto rec = [&](auto&& self, uint64_t uncovered) -> void {
    if (!uncovered) {
      std::vector<uint64_t> adj(Graph::kMaxVertices, 0);
      for (int v : g.vertices()) adj[v] = g.neighbour_mask(v);
      for (Edge e : removed) {
        adj[e.u] &= ~(uint64_t{1} << e.v);
        adj[e.v] &= ~(uint64_t{1} << e.u);
      }
      out.push_back(TwoFactor{cycles_of(g, adj)});
      return;
    }
    int v = __builtin_ctzll(uncovered);
    uint64_t cands = g.neighbour_mask(v) & uncovered;
    while (cands) {
      int u = __builtin_ctzll(cands);
      cands &= cands - 1;
      removed.emplace_back(v, u);
      self(self, uncovered & ~(uint64_t{1} << v) & ~(uint64_t{1} << u));
      removed.pop_back();
    }
  };
  rec(rec, v3);
  require(!out.empty(), Errc::no_two_factor,
          "the graph has no spanning cycle cover");
  return out;
}

int oddness(const Graph& g, bool opt_in_large) {
  int best = kInfiniteLength;
  for (const TwoFactor& f : enumerate_two_factors(g, opt_in_large))
    best = std::min(best, f.odd_cycle_count());
  return best;
}

namespace {

// shortest odd closed walk through s equals the shortest odd cycle through
// some vertex; parity-layered BFS
int odd_walk_from(const Graph& g, int s) {
  constexpr int kUnset = -1;
  std::vector<std::array<int, 2>> dist(Graph::kMaxVertices, {kUnset, kUnset});
  dist[s][0] = 0;
  std::vector<std::pair<int, int>> queue{{s, 0}};
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [v, par] = queue[head];
    for (int u : g.neighbours(v)) {
      int np = par ^ 1;
      if (dist[u][np] != kUnset) continue;
      dist[u][np] = dist[v][par] + 1;
      queue.emplace_back(u, np);
    }
  }
  return dist[s][1] == kUnset ? kInfiniteLength : dist[s][1];
}

}  // namespace

int odd_girth(const Graph& g) {
  int best = kInfiniteLength;
  for (int v : g.vertices()) best = std::min(best, odd_walk_from(g, v));
  return best;
}

int girth(const Graph& g) {
  // shortest cycle through edge (u,v): 1 + shortest u-v path avoiding the
  // edge itself
  int best = kInfiniteLength;
  for (Edge e : g.edges()) {
    std::vector<int> dist(Graph::kMaxVertices, -1);
    dist[e.u] = 0;
    std::vector<int> queue{e.u};
    for (size_t head = 0; head < queue.size() && dist[e.v] < 0; ++head) {
      int v = queue[head];
      for (int u : g.neighbours(v)) {
        if (v == e.u && u == e.v) continue;
        if (dist[u] >= 0) continue;
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
    if (dist[e.v] >= 0) best = std::min(best, dist[e.v] + 1);
  }
  return best;
}

FactorStat g_plus(const Graph& g, bool opt_in_large) {
  std::vector<TwoFactor> factors;
  try {
    factors = enumerate_two_factors(g, opt_in_large);
  } catch (const Error& e) {
    if (e.code() == Errc::no_two_factor) return FactorStat::undefined();
    if (e.code() == Errc::budget_exceeded) return FactorStat::budget();
    throw;
  }
  int best = 0;
  bool inf = false;
  for (const TwoFactor& f : factors) {
    int len = f.min_odd_cycle_length();
    if (len == kInfiniteLength)
      inf = true;
    else
      best = std::max(best, len);
  }
  return inf ? FactorStat::infinite() : FactorStat::of(best);
}

}  // namespace pec
