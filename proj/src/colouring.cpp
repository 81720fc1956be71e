#include "pec/colouring.hpp"

#include <algorithm>
#include <cstring>

namespace pec {

const char* colour_name(Colour c) {
  switch (c) {
    case Colour::alpha: return "alpha";
    case Colour::beta: return "beta";
    case Colour::gamma: return "gamma";
    case Colour::delta: return "delta";
  }
  return "?";
}

std::optional<Colour> colour_from_name(const std::string& name) {
  for (Colour c : kAllColours)
    if (name == colour_name(c)) return c;
  return std::nullopt;
}

EdgeColouring::EdgeColouring(Graph g, std::vector<Colour> by_edge)
    : g_(std::move(g)), by_edge_(std::move(by_edge)) {
  require(by_edge_.size() == static_cast<size_t>(g_.edge_count()),
          Errc::invalid_colouring,
          "assignment size does not match edge count");
}

EdgeColouring EdgeColouring::with(Edge e, Colour c) const {
  EdgeColouring out = *this;
  out.by_edge_[g_.edge_index(e)] = c;
  return out;
}

unsigned EdgeColouring::colours_at(int v) const {
  unsigned mask = 0;
  for (int u : g_.neighbours(v))
    mask |= 1u << static_cast<int>(at(Edge(v, u)));
  return mask;
}

std::optional<Edge> EdgeColouring::edge_at(int v, Colour c) const {
  for (int u : g_.neighbours(v)) {
    Edge e(v, u);
    if (at(e) == c) return e;
  }
  return std::nullopt;
}

Properness classify(const EdgeColouring& c) {
  bool improper_delta_only = true;
  bool any_clash = false;
  const Graph& g = c.graph();
  for (int v : g.vertices()) {
    int count[4] = {0, 0, 0, 0};
    for (int u : g.neighbours(v)) count[static_cast<int>(c.at(Edge(v, u)))]++;
    for (int t = 0; t < 4; ++t) {
      if (count[t] < 2) continue;
      any_clash = true;
      if (t != static_cast<int>(Colour::delta)) improper_delta_only = false;
    }
  }
  if (!any_clash) return Properness::proper;
  return improper_delta_only ? Properness::delta_improper : Properness::invalid;
}

std::vector<Edge> colour_class(const EdgeColouring& c, Colour x) {
  std::vector<Edge> out;
  const auto& edges = c.graph().edges();
  for (size_t i = 0; i < edges.size(); ++i)
    if (c.at_index(static_cast<int>(i)) == x) out.push_back(edges[i]);
  return out;
}

namespace {

// Unique (x,y)-coloured edge at v other than `avoid`, if any. Valid for
// proper and delta-improper colourings: non-delta classes are matchings.
std::optional<Edge> alternating_step(const EdgeColouring& c, int v, Colour x,
                                     Colour y, Edge avoid) {
  for (int u : c.graph().neighbours(v)) {
    Edge e(v, u);
    if (e == avoid) continue;
    Colour t = c.at(e);
    if (t == x || t == y) return e;
  }
  return std::nullopt;
}

// The maximal alternating walk structure through v in the (x,y)-subgraph.
// Each vertex carries at most one edge of each colour, so the component is a
// path or an even cycle and the walk is forced.
KempeComponent walk_component(const EdgeColouring& c, Colour x, Colour y,
                              int v) {
  KempeComponent comp;
  comp.x = std::min(x, y);
  comp.y = std::max(x, y);

  std::vector<int> fwd{v};
  Edge prev{};  // default edge matches nothing
  int cur = v;
  while (true) {
    std::optional<Edge> e = alternating_step(c, cur, x, y, prev);
    if (!e) break;
    cur = e->other(cur);
    prev = *e;
    if (cur == v) {  // closed up: even cycle
      comp.vertices = std::move(fwd);
      comp.is_cycle = true;
      return comp;
    }
    fwd.push_back(cur);
  }

  // path: walk the other direction from v and prepend
  comp.is_cycle = false;
  if (fwd.size() >= 2) {
    std::vector<int> back;
    cur = v;
    prev = Edge(fwd[0], fwd[1]);
    while (true) {
      std::optional<Edge> e = alternating_step(c, cur, x, y, prev);
      if (!e) break;
      cur = e->other(cur);
      prev = *e;
      back.push_back(cur);
    }
    std::reverse(back.begin(), back.end());
    back.insert(back.end(), fwd.begin(), fwd.end());
    comp.vertices = std::move(back);
  } else {
    comp.vertices = std::move(fwd);
  }
  return comp;
}

}  // namespace

KempeComponent kempe_component_at(const EdgeColouring& c, Colour x, Colour y,
                                  int v) {
  require(x != y, Errc::invariant_violation, "colour pair must be distinct");
  require(classify(c) == Properness::proper, Errc::invalid_colouring,
          "kempe components are defined on proper colourings");
  unsigned mask = c.colours_at(v);
  bool touches =
      (mask >> static_cast<int>(x) & 1) || (mask >> static_cast<int>(y) & 1);
  require(touches, Errc::vertex_not_in_subgraph,
          "vertex " + std::to_string(v) + " touches neither colour");
  return walk_component(c, x, y, v);
}

namespace {

std::vector<Edge> component_edges(const KempeComponent& comp) {
  std::vector<Edge> out;
  const auto& vs = comp.vertices;
  for (size_t i = 0; i + 1 < vs.size(); ++i) out.emplace_back(vs[i], vs[i + 1]);
  if (comp.is_cycle && vs.size() >= 3) out.emplace_back(vs.back(), vs.front());
  return out;
}

}  // namespace

EdgeColouring kempe_swap(const EdgeColouring& c, const KempeComponent& comp) {
  require(!comp.vertices.empty(), Errc::stale_component, "empty component");
  // currency check: recomputing the component at its first vertex must give
  // the same vertex set
  KempeComponent now;
  try {
    now = kempe_component_at(c, comp.x, comp.y, comp.vertices.front());
  } catch (const Error&) {
    fail(Errc::stale_component, "component is not part of this colouring");
  }
  std::vector<int> a = comp.vertices, b = now.vertices;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b || now.is_cycle != comp.is_cycle)
    fail(Errc::stale_component, "component is not part of this colouring");

  EdgeColouring out = c;
  for (Edge e : component_edges(comp)) {
    Colour t = out.at(e);
    require(t == comp.x || t == comp.y, Errc::stale_component,
            "component edge " + e.str() + " has an outside colour");
    out = out.with(e, t == comp.x ? comp.y : comp.x);
  }
  return out;
}

namespace {

constexpr unsigned kNonDeltaMask = 0b0111;

Colour least_colour(unsigned mask) {
  return static_cast<Colour>(__builtin_ctz(mask));
}

// Colours of {alpha,beta,gamma} legal for recolouring edge e (currently
// delta): absent at both endpoints.
unsigned free_colours(const EdgeColouring& c, Edge e) {
  return kNonDeltaMask & ~c.colours_at(e.u) & ~c.colours_at(e.v);
}

}  // namespace

EdgeColouring repair_delta_improper(const EdgeColouring& input) {
  Properness p = classify(input);
  require(p != Properness::invalid, Errc::invalid_colouring,
          "repair requires a proper or delta-improper colouring");
  if (p == Properness::proper) return input;
  EdgeColouring cur = input;

  while (true) {
    // least delta-delta conflict in lexicographic (e, f) order
    std::optional<std::pair<Edge, Edge>> conflict;
    const auto& edges = cur.graph().edges();
    for (size_t i = 0; i < edges.size() && !conflict; ++i) {
      if (cur.at_index(static_cast<int>(i)) != Colour::delta) continue;
      for (size_t j = i + 1; j < edges.size(); ++j) {
        if (cur.at_index(static_cast<int>(j)) != Colour::delta) continue;
        if (!edges[i].adjacent_to(edges[j])) continue;
        conflict = {edges[i], edges[j]};
        break;
      }
    }
    if (!conflict) break;

    auto [e, f] = *conflict;
    int u = e.touches(f.u) ? f.u : f.v;  // the shared vertex
    int v = e.other(u);
    int w = f.other(u);

    unsigned at_u = cur.colours_at(u);
    if (cur.graph().degree(u) == 2 || (at_u & kNonDeltaMask) == 0) {
      // u imposes no colour of {alpha,beta,gamma}; recolour the lesser
      // conflict edge with the least colour free at its far end
      unsigned free = free_colours(cur, e);
      require(free != 0, Errc::invariant_violation,
              "no free colour at a 2-constrained delta edge");
      cur = cur.with(e, least_colour(free));
      continue;
    }

    // d(u) = 3 and the third edge at u carries a single colour a
    Colour a = least_colour(at_u & kNonDeltaMask);
    unsigned free_e = free_colours(cur, e);
    if (free_e != 0) {
      cur = cur.with(e, least_colour(free_e));
      continue;
    }
    unsigned free_f = free_colours(cur, f);
    if (free_f != 0) {
      cur = cur.with(f, least_colour(free_f));
      continue;
    }

    // Both far ends carry both remaining colours. u has degree 1 in the
    // (a, b)-subgraph, so the alternating path P ends at u; exchanging a and
    // b along P frees a at u while the colours at any non-endpoint of P are
    // unchanged. Recolour the conflict edge whose far end is not P's other
    // endpoint.
    Colour b = least_colour(kNonDeltaMask & ~(1u << static_cast<int>(a)));
    KempeComponent path = walk_component(cur, a, b, u);
    require(!path.is_cycle, Errc::invariant_violation,
            "alternating component at a conflict vertex must be a path");
    int far = path.vertices.front() == u ? path.vertices.back()
                                         : path.vertices.front();
    require(!(v == far && w == far), Errc::invariant_violation,
            "both conflict ends coincide with the path endpoint");
    Edge pick = v != far ? (w != far ? (v < w ? e : f) : e) : f;
    for (Edge pe : component_edges(path)) {
      Colour t = cur.at(pe);
      cur = cur.with(pe, t == a ? b : a);
    }
    require((free_colours(cur, pick) >> static_cast<int>(a)) & 1,
            Errc::invariant_violation, "colour not freed by the exchange");
    cur = cur.with(pick, a);
  }

  // sweep up delta edges that are not needed at all: any with a colour of
  // {alpha,beta,gamma} free at both ends
  bool changed = true;
  while (changed) {
    changed = false;
    for (Edge e : colour_class(cur, Colour::delta)) {
      unsigned free = free_colours(cur, e);
      if (free == 0) continue;
      cur = cur.with(e, least_colour(free));
      changed = true;
    }
  }
  return cur;
}

std::optional<EdgeColouring> decide_three_colourable(
    const Graph& g, const SearchBudget& budget) {
  int m = g.edge_count();
  if (m == 0) return EdgeColouring(g, {});

  // smallest-last vertex ordering: repeatedly strip a minimum-degree vertex
  // (least id on ties); the stripped sequence reversed puts the dense core
  // first
  std::vector<int> ids = g.vertices();
  std::vector<int> deg(Graph::kMaxVertices, -1);
  uint64_t alive = g.vertex_mask();
  for (int v : ids) deg[v] = g.degree(v);
  std::vector<int> stripped;
  while (alive) {
    int best = -1;
    for (int v : ids) {
      if (!(alive >> v & 1)) continue;
      if (best < 0 || deg[v] < deg[best]) best = v;
    }
    stripped.push_back(best);
    alive &= ~(uint64_t{1} << best);
    for (int u : g.neighbours(best))
      if (alive >> u & 1) --deg[u];
  }
  std::reverse(stripped.begin(), stripped.end());

  std::vector<int> pos(Graph::kMaxVertices, -1);
  for (size_t i = 0; i < stripped.size(); ++i)
    pos[stripped[i]] = static_cast<int>(i);

  // edge order: an edge enters when its later endpoint (in the order above)
  // does, earlier endpoints first
  std::vector<Edge> order;
  order.reserve(m);
  for (size_t k = 0; k < stripped.size(); ++k)
    for (size_t j = 0; j < k; ++j)
      if (g.has_edge(stripped[j], stripped[k]))
        order.emplace_back(stripped[j], stripped[k]);
  require(static_cast<int>(order.size()) == m, Errc::invariant_violation,
          "edge ordering lost edges");

  std::vector<unsigned> used(Graph::kMaxVertices, 0);
  std::vector<Colour> chosen(m, Colour::alpha);
  uint64_t nodes = 0;

  // backtracking with canonical colour introduction: colour t may only be
  // used once all smaller colours appear earlier
  auto rec = [&](auto&& self, int i, int max_used) -> bool {
    if (i == m) return true;
    Edge e = order[i];
    unsigned blocked = used[e.u] | used[e.v];
    int limit = std::min(2, max_used + 1);
    for (int t = 0; t <= limit; ++t) {
      if (blocked >> t & 1) continue;
      if (++nodes > budget.max_nodes)
        fail(Errc::budget_exceeded,
             "3-edge-colourability search exceeded " +
                 std::to_string(budget.max_nodes) + " nodes");
      used[e.u] |= 1u << t;
      used[e.v] |= 1u << t;
      chosen[i] = static_cast<Colour>(t);
      if (self(self, i + 1, std::max(max_used, t))) return true;
      used[e.u] &= ~(1u << t);
      used[e.v] &= ~(1u << t);
    }
    return false;
  };
  if (!rec(rec, 0, -1)) return std::nullopt;

  std::vector<Colour> by_edge(m, Colour::alpha);
  for (int i = 0; i < m; ++i) by_edge[g.edge_index(order[i])] = chosen[i];
  return EdgeColouring(g, std::move(by_edge));
}

}  // namespace pec
