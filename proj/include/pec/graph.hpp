#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "pec/error.hpp"

namespace pec {

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
  int u = -1, v = -1;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    require(a != b, Errc::loop_edge,
            "loop at vertex " + std::to_string(a));
  }

  bool touches(int w) const { return u == w || v == w; }
  int other(int w) const { return u == w ? v : u; }
  bool adjacent_to(Edge o) const {
    return touches(o.u) || touches(o.v);
  }
  std::string str() const {
    return std::to_string(u) + "-" + std::to_string(v);
  }

  friend bool operator==(Edge a, Edge b) { return a.u == b.u && a.v == b.v; }
  friend bool operator!=(Edge a, Edge b) { return !(a == b); }
  friend bool operator<(Edge a, Edge b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

// Immutable simple graph with maximum degree 3 and vertex ids in [0, 64).
// build() produces dense ids 0..n-1; deletions keep the surviving ids
// (reductions rely on stable ids, so holes and isolated vertices are fine).
// All mutators return new values.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  // n vertices 0..n-1 plus the given edges. Rejects loops, duplicates,
  // out-of-range endpoints and any vertex that would exceed degree 3.
  static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return __builtin_popcountll(verts_); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  uint64_t vertex_mask() const { return verts_; }
  bool has_vertex(int v) const {
    return v >= 0 && v < kMaxVertices && (verts_ >> v & 1);
  }
  bool has_edge(int u, int v) const {
    return has_vertex(u) && has_vertex(v) && (adj_[u] >> v & 1);
  }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  std::vector<int> vertices() const;
  int degree(int v) const {
    check_vertex(v);
    return __builtin_popcountll(adj_[v]);
  }
  uint64_t neighbour_mask(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  std::vector<int> neighbours(int v) const;

  const std::vector<Edge>& edges() const { return edges_; }
  // Position of e in edges(); throws unknown_edge if absent.
  int edge_index(Edge e) const;
  int find_edge(Edge e) const;  // -1 if absent

  int max_degree() const;
  bool is_cubic() const;  // nonempty and every vertex of degree 3
  bool is_connected() const;
  int degree_count(int d) const;  // |{v : deg(v) = d}|

  Graph with_edge(int u, int v) const;
  Graph with_vertex(int v) const;
  Graph without_edge(Edge e) const;
  Graph without_edges(const std::vector<Edge>& es) const;
  Graph without_vertex(int v) const;
  Graph without_vertices(const std::vector<int>& vs) const;

  // Connected components as graphs over the original ids.
  std::vector<Graph> components() const;

  // Same vertex set and edge set (label-sensitive).
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.verts_ == b.verts_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  void check_vertex(int v) const {
    require(has_vertex(v), Errc::unknown_vertex,
            "vertex " + std::to_string(v) + " not in graph");
  }
  void add_edge_checked(int u, int v);

  uint64_t verts_ = 0;
  std::array<uint64_t, kMaxVertices> adj_{};
  std::vector<Edge> edges_;  // sorted ascending
};

// Number of edges of g with both ends in the subset.
int induced_edge_count(const Graph& g, uint64_t subset_mask);
int induced_edge_count(const Graph& g, const std::vector<int>& subset);

// Shortest path length in g between the endpoint sets V(a) and V(b);
// kInfiniteDistance when no path exists. The sets must be non-empty,
// subsets of E(g), and vertex-disjoint (NotDisjoint otherwise).
int edge_set_distance(const Graph& g, const std::vector<Edge>& a,
                      const std::vector<Edge>& b);

// Exact isomorphism test by degree-refined backtracking (graphs up to 64
// vertices; intended scale is far smaller).
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace pec
