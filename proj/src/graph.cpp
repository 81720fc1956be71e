#include "pec/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pec {

namespace {

// iterate set bits low to high
template <typename F>
void for_bits(uint64_t mask, F&& f) {
  while (mask) {
    int v = __builtin_ctzll(mask);
    mask &= mask - 1;
    f(v);
  }
}

}  // namespace

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
  require(n >= 0 && n <= kMaxVertices, Errc::too_many_vertices,
          "vertex count " + std::to_string(n) + " outside [0, 64]");
  Graph g;
  g.verts_ = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  for (auto [a, b] : edges) {
    require(a >= 0 && a < n && b >= 0 && b < n, Errc::unknown_vertex,
            "edge endpoint outside [0, n)");
    g.add_edge_checked(a, b);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

void Graph::add_edge_checked(int u, int v) {
  Edge e(u, v);  // rejects loops
  require(!(adj_[e.u] >> e.v & 1), Errc::duplicate_edge,
          "duplicate edge " + e.str());
  require(degree(e.u) < 3 && degree(e.v) < 3, Errc::degree_exceeded,
          "degree above 3 at edge " + e.str());
  adj_[e.u] |= uint64_t{1} << e.v;
  adj_[e.v] |= uint64_t{1} << e.u;
  edges_.push_back(e);
}

std::vector<int> Graph::vertices() const {
  std::vector<int> out;
  out.reserve(vertex_count());
  for_bits(verts_, [&](int v) { out.push_back(v); });
  return out;
}

std::vector<int> Graph::neighbours(int v) const {
  std::vector<int> out;
  for_bits(neighbour_mask(v), [&](int u) { out.push_back(u); });
  return out;
}

int Graph::edge_index(Edge e) const {
  int i = find_edge(e);
  require(i >= 0, Errc::unknown_edge, "edge " + e.str() + " not in graph");
  return i;
}

int Graph::find_edge(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Graph::max_degree() const {
  int d = 0;
  for_bits(verts_, [&](int v) { d = std::max(d, degree(v)); });
  return d;
}

bool Graph::is_cubic() const {
  if (verts_ == 0) return false;
  bool cubic = true;
  for_bits(verts_, [&](int v) { cubic = cubic && degree(v) == 3; });
  return cubic;
}

int Graph::degree_count(int d) const {
  int count = 0;
  for_bits(verts_, [&](int v) { count += degree(v) == d; });
  return count;
}

bool Graph::is_connected() const {
  if (vertex_count() <= 1) return true;
  int start = __builtin_ctzll(verts_);
  uint64_t seen = uint64_t{1} << start;
  uint64_t frontier = seen;
  while (frontier) {
    uint64_t next = 0;
    for_bits(frontier, [&](int v) { next |= adj_[v]; });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == verts_;
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.check_vertex(u);
  g.check_vertex(v);
  g.add_edge_checked(u, v);
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

Graph Graph::with_vertex(int v) const {
  require(v >= 0 && v < kMaxVertices, Errc::too_many_vertices,
          "vertex id " + std::to_string(v) + " outside [0, 64)");
  Graph g = *this;
  g.verts_ |= uint64_t{1} << v;
  return g;
}

Graph Graph::without_edge(Edge e) const {
  Graph g = *this;
  int i = g.edge_index(e);
  g.edges_.erase(g.edges_.begin() + i);
  g.adj_[e.u] &= ~(uint64_t{1} << e.v);
  g.adj_[e.v] &= ~(uint64_t{1} << e.u);
  return g;
}

Graph Graph::without_edges(const std::vector<Edge>& es) const {
  Graph g = *this;
  for (Edge e : es) g = g.without_edge(e);
  return g;
}

Graph Graph::without_vertex(int v) const {
  Graph g = *this;
  g.check_vertex(v);
  for_bits(g.adj_[v], [&](int u) { g.adj_[u] &= ~(uint64_t{1} << v); });
  g.adj_[v] = 0;
  g.verts_ &= ~(uint64_t{1} << v);
  std::erase_if(g.edges_, [&](Edge e) { return e.touches(v); });
  return g;
}

Graph Graph::without_vertices(const std::vector<int>& vs) const {
  Graph g = *this;
  for (int v : vs) g = g.without_vertex(v);
  return g;
}

std::vector<Graph> Graph::components() const {
  std::vector<Graph> out;
  uint64_t todo = verts_;
  while (todo) {
    int start = __builtin_ctzll(todo);
    uint64_t seen = uint64_t{1} << start;
    uint64_t frontier = seen;
    while (frontier) {
      uint64_t next = 0;
      for_bits(frontier, [&](int v) { next |= adj_[v]; });
      frontier = next & ~seen;
      seen |= next;
    }
    Graph comp;
    comp.verts_ = seen;
    for (Edge e : edges_) {
      if (seen >> e.u & 1) {
        comp.adj_[e.u] |= uint64_t{1} << e.v;
        comp.adj_[e.v] |= uint64_t{1} << e.u;
        comp.edges_.push_back(e);
      }
    }
    out.push_back(std::move(comp));
    todo &= ~seen;
  }
  return out;
}

int induced_edge_count(const Graph& g, uint64_t subset_mask) {
  require((subset_mask & ~g.vertex_mask()) == 0, Errc::unknown_vertex,
          "subset contains vertices outside the graph");
  int count = 0;
  for (Edge e : g.edges())
    count += (subset_mask >> e.u & 1) && (subset_mask >> e.v & 1);
  return count;
}

int induced_edge_count(const Graph& g, const std::vector<int>& subset) {
  uint64_t mask = 0;
  for (int v : subset) {
    require(v >= 0 && v < Graph::kMaxVertices, Errc::unknown_vertex,
            "vertex " + std::to_string(v) + " out of range");
    mask |= uint64_t{1} << v;
  }
  return induced_edge_count(g, mask);
}

int edge_set_distance(const Graph& g, const std::vector<Edge>& a,
                      const std::vector<Edge>& b) {
  require(!a.empty() && !b.empty(), Errc::invariant_violation,
          "edge_set_distance over an empty set");
  uint64_t va = 0, vb = 0;
  for (Edge e : a) {
    g.edge_index(e);
    va |= uint64_t{1} << e.u | uint64_t{1} << e.v;
  }
  for (Edge e : b) {
    g.edge_index(e);
    vb |= uint64_t{1} << e.u | uint64_t{1} << e.v;
  }
  require((va & vb) == 0, Errc::not_disjoint,
          "edge sets share a vertex");
  // multi-source BFS from V(a) until V(b) is hit
  uint64_t seen = va;
  uint64_t frontier = va;
  int dist = 0;
  while (frontier) {
    if (frontier & vb) return dist;
    uint64_t next = 0;
    while (frontier) {
      int v = __builtin_ctzll(frontier);
      frontier &= frontier - 1;
      next |= g.neighbour_mask(v);
    }
    frontier = next & ~seen;
    seen |= next;
    ++dist;
  }
  return kInfiniteDistance;
}

namespace {

// dense relabelling in ascending id order
struct Compact {
  int n = 0;
  std::vector<uint64_t> adj;  // over new labels
  std::vector<int> deg;
};

Compact compact_of(const Graph& g) {
  std::vector<int> ids = g.vertices();
  std::vector<int> newid(Graph::kMaxVertices, -1);
  for (size_t i = 0; i < ids.size(); ++i) newid[ids[i]] = static_cast<int>(i);
  Compact c;
  c.n = static_cast<int>(ids.size());
  c.adj.assign(c.n, 0);
  c.deg.assign(c.n, 0);
  for (Edge e : g.edges()) {
    int u = newid[e.u], v = newid[e.v];
    c.adj[u] |= uint64_t{1} << v;
    c.adj[v] |= uint64_t{1} << u;
  }
  for (int v = 0; v < c.n; ++v) c.deg[v] = __builtin_popcountll(c.adj[v]);
  return c;
}

// Iterated neighbour-class refinement; returns a class id per vertex.
// Ids are ranks in sorted key order, so they are label-independent and
// comparable between two graphs.
std::vector<int> refine_classes(const Compact& c) {
  std::vector<int> cls(c.deg);
  for (int round = 0; round < c.n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> keys(c.n);
    for (int v = 0; v < c.n; ++v) {
      std::vector<int> nb;
      uint64_t m = c.adj[v];
      while (m) {
        int u = __builtin_ctzll(m);
        m &= m - 1;
        nb.push_back(cls[u]);
      }
      std::sort(nb.begin(), nb.end());
      keys[v] = {cls[v], std::move(nb)};
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (const auto& k : keys) rank.emplace(k, 0);
    int next_id = 0;
    for (auto& [k, r] : rank) r = next_id++;
    std::vector<int> next(c.n);
    for (int v = 0; v < c.n; ++v) next[v] = rank[keys[v]];
    if (next == cls) break;
    cls = std::move(next);
  }
  return cls;
}

bool extend_mapping(const Compact& a, const Compact& b,
                    const std::vector<int>& cls_a,
                    const std::vector<int>& cls_b, std::vector<int>& map_ab,
                    uint64_t used_b, int mapped) {
  if (mapped == a.n) return true;
  // next vertex of a: most already-mapped neighbours, then least id
  int best = -1, best_links = -1;
  for (int v = 0; v < a.n; ++v) {
    if (map_ab[v] >= 0) continue;
    int links = 0;
    uint64_t m = a.adj[v];
    while (m) {
      int u = __builtin_ctzll(m);
      m &= m - 1;
      links += map_ab[u] >= 0;
    }
    if (links > best_links) {
      best = v;
      best_links = links;
    }
  }
  for (int w = 0; w < b.n; ++w) {
    if (used_b >> w & 1) continue;
    if (cls_b[w] != cls_a[best]) continue;
    bool ok = true;
    for (int u = 0; u < a.n && ok; ++u) {
      if (map_ab[u] < 0) continue;
      bool ea = a.adj[best] >> u & 1;
      bool eb = b.adj[w] >> map_ab[u] & 1;
      ok = ea == eb;
    }
    if (!ok) continue;
    map_ab[best] = w;
    if (extend_mapping(a, b, cls_a, cls_b, map_ab, used_b | uint64_t{1} << w,
                       mapped + 1))
      return true;
    map_ab[best] = -1;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& ga, const Graph& gb) {
  if (ga.vertex_count() != gb.vertex_count()) return false;
  if (ga.edge_count() != gb.edge_count()) return false;
  Compact a = compact_of(ga), b = compact_of(gb);
  std::vector<int> da(a.deg), db(b.deg);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> cls_a = refine_classes(a), cls_b = refine_classes(b);
  // class ids are assigned by (old class, neighbour multiset) insertion order,
  // which is a graph invariant, so class histograms must agree
  std::vector<int> ha(cls_a), hb(cls_b);
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;
  if (a.n == 0) return true;
  std::vector<int> map_ab(a.n, -1);
  return extend_mapping(a, b, cls_a, cls_b, map_ab, 0, 0);
}

}  // namespace pec
