#include "pec/constructions.hpp"

#include <algorithm>
#include <cctype>

namespace pec {

namespace {

std::vector<std::pair<int, int>> g5_edges(int off) {
  return {{off + 0, off + 1}, {off + 1, off + 2}, {off + 2, off + 3},
          {off + 3, off + 4}, {off + 4, off + 0}, {off + 1, off + 3},
          {off + 2, off + 4}};
}

}  // namespace

Graph make_named(const std::string& name) {
  std::string up;
  for (char ch : name) up.push_back(static_cast<char>(std::toupper(ch)));

  if (up == "PETERSEN") {
    std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                          {4, 0}};
    // inner pentagram: 5-7-9-6-8-5
    e.insert(e.end(), {{5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    for (int i = 0; i < 5; ++i) e.emplace_back(i, i + 5);
    return Graph::build(10, e);
  }
  if (up == "G5") return Graph::build(5, g5_edges(0));
  if (up == "P_PRIME" || up == "PPRIME" || up == "P'") {
    auto e1 = g5_edges(0);
    auto e2 = g5_edges(5);
    e1.insert(e1.end(), e2.begin(), e2.end());
    e1.emplace_back(0, 5);  // both degree-2 vertices
    return Graph::build(10, e1);
  }
  if (up == "K4")
    return Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (up == "K33") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
    return Graph::build(6, e);
  }
  // C<k> or CYCLE(<k>)
  std::string digits;
  if (up.size() >= 2 && up[0] == 'C' && std::isdigit(up[1]))
    digits = up.substr(1);
  else if (up.rfind("CYCLE(", 0) == 0 && up.back() == ')')
    digits = up.substr(6, up.size() - 7);
  if (!digits.empty() && digits.size() <= 4 &&
      std::all_of(digits.begin(), digits.end(),
                  [](char ch) { return std::isdigit(ch); })) {
    int k = std::stoi(digits);
    require(k >= 3, Errc::unknown_name, "cycles need length >= 3");
    require(k <= Graph::kMaxVertices, Errc::too_many_vertices,
            "cycle length exceeds 64");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph::build(k, e);
  }
  fail(Errc::unknown_name, "no generator named '" + name + "'");
}

std::pair<Edge, Edge> petersen_attachment_pair() {
  return {Edge(0, 5), Edge(1, 6)};
}

std::pair<Graph, ReductionStep> remove_pendant(const Graph& g, int v) {
  require(g.has_vertex(v) && g.degree(v) == 1, Errc::not_pendant,
          "vertex " + std::to_string(v) + " is not a pendant vertex");
  ReductionStep step;
  step.kind = ReductionStep::Kind::pendant_removal;
  step.removed_vertices = {v};
  step.removed_edges = {Edge(v, g.neighbours(v)[0])};
  return {g.without_vertex(v), step};
}

std::pair<Graph, ReductionStep> reduce_triangle(const Graph& g,
                                                const std::array<int, 3>& t) {
  auto [a, b, c] = t;
  require(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c),
          Errc::not_reducible, "vertices are not a triangle");
  int outside[3];
  for (int i = 0; i < 3; ++i) {
    int v = t[i];
    require(g.degree(v) == 3, Errc::not_reducible,
            "triangle vertex " + std::to_string(v) + " has degree below 3");
    int out = -1;
    for (int u : g.neighbours(v))
      if (u != a && u != b && u != c) out = u;
    outside[i] = out;
  }
  require(outside[0] != outside[1] && outside[0] != outside[2] &&
              outside[1] != outside[2],
          Errc::not_reducible, "triangle neighbours are not distinct");

  int w = std::min({a, b, c});
  Graph out = g.without_vertices({a, b, c}).with_vertex(w);
  ReductionStep step;
  step.kind = ReductionStep::Kind::triangle_contraction;
  step.removed_vertices = {a, b, c};
  std::sort(step.removed_vertices.begin(), step.removed_vertices.end());
  step.removed_edges = {Edge(a, b), Edge(b, c), Edge(a, c)};
  for (int i = 0; i < 3; ++i) step.removed_edges.emplace_back(t[i], outside[i]);
  std::sort(step.removed_edges.begin(), step.removed_edges.end());
  step.introduced_vertex = w;
  for (int i = 0; i < 3; ++i) {
    out = out.with_edge(w, outside[i]);
    step.introduced_edges.emplace_back(w, outside[i]);
  }
  std::sort(step.introduced_edges.begin(), step.introduced_edges.end());
  return {out, step};
}

std::pair<Graph, std::vector<ReductionStep>> reduce_all(const Graph& g) {
  Graph cur = g;
  std::vector<ReductionStep> steps;
  while (true) {
    int pendant = -1;
    for (int v : cur.vertices())
      if (cur.degree(v) == 1) {
        pendant = v;
        break;
      }
    if (pendant >= 0) {
      auto [next, step] = remove_pendant(cur, pendant);
      cur = std::move(next);
      steps.push_back(std::move(step));
      continue;
    }
    bool contracted = false;
    std::vector<int> vs = cur.vertices();
    for (size_t i = 0; i < vs.size() && !contracted; ++i)
      for (size_t j = i + 1; j < vs.size() && !contracted; ++j)
        for (size_t k = j + 1; k < vs.size() && !contracted; ++k) {
          std::array<int, 3> t{vs[i], vs[j], vs[k]};
          if (!cur.has_edge(t[0], t[1]) || !cur.has_edge(t[1], t[2]) ||
              !cur.has_edge(t[0], t[2]))
            continue;
          try {
            auto [next, step] = reduce_triangle(cur, t);
            cur = std::move(next);
            steps.push_back(std::move(step));
            contracted = true;
          } catch (const Error& e) {
            if (e.code() != Errc::not_reducible) throw;
          }
        }
    if (!contracted) break;
  }
  return {cur, steps};
}

Graph dot_product(const Graph& g1, Edge e1, Edge f1, const Graph& g2, Edge uv,
                  bool alt_pairing) {
  require(g1.is_cubic() && g2.is_cubic(), Errc::not_cubic,
          "dot product needs two cubic graphs");
  g1.edge_index(e1);
  g1.edge_index(f1);
  g2.edge_index(uv);
  require(!e1.adjacent_to(f1), Errc::edges_adjacent,
          "the two edges removed from the first factor must be disjoint");

  // shift g2 ids past g1's; ids are only relabelled densely at the end, so
  // intermediate values may exceed the 64-vertex window
  int shift = g1.vertices().back() + 1;

  int u = uv.u, v = uv.v;
  std::vector<int> un, vn;
  for (int w : g2.neighbours(u))
    if (w != v) un.push_back(w);
  for (int w : g2.neighbours(v))
    if (w != u) vn.push_back(w);
  std::sort(un.begin(), un.end());
  std::sort(vn.begin(), vn.end());
  if (alt_pairing) std::swap(vn[0], vn[1]);

  std::vector<std::pair<int, int>> edges;
  for (Edge e : g1.edges())
    if (e != e1 && e != f1) edges.emplace_back(e.u, e.v);
  for (Edge e : g2.edges())
    if (!e.touches(u) && !e.touches(v))
      edges.emplace_back(e.u + shift, e.v + shift);
  std::vector<std::pair<int, int>> joins = {{e1.u, un[0] + shift},
                                            {e1.v, un[1] + shift},
                                            {f1.u, vn[0] + shift},
                                            {f1.v, vn[1] + shift}};
  for (auto [x, y] : joins) {
    for (auto [p, q] : edges)
      require(!(p == std::min(x, y) && q == std::max(x, y)),
              Errc::collision_edge,
              "attachment would duplicate an existing edge");
    edges.emplace_back(x, y);
  }

  // assemble over dense ids: g1 ids stay, shifted g2 ids minus u, v are
  // compacted by build() only if already dense; keep explicit relabelling
  int hi = 0;
  for (auto [x, y] : edges) hi = std::max({hi, x, y});
  std::vector<int> present(hi + 1, 0);
  for (auto [x, y] : edges) present[x] = present[y] = 1;
  std::vector<int> newid(hi + 1, -1);
  int n = 0;
  for (int i = 0; i <= hi; ++i)
    if (present[i]) newid[i] = n++;
  std::vector<std::pair<int, int>> dense;
  for (auto [x, y] : edges) dense.emplace_back(newid[x], newid[y]);
  require(n <= Graph::kMaxVertices, Errc::too_many_vertices,
          "dot product exceeds 64 vertices");
  Graph out = Graph::build(n, dense);
  require(out.is_cubic(), Errc::invariant_violation,
          "dot product did not produce a cubic graph");
  return out;
}

}  // namespace pec
