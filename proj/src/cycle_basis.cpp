#include "grin/cycle_basis.hpp"

#include <queue>
#include <sstream>

namespace grin {

SpanningTree spanning_tree(const Graph& g) {
  SpanningTree t;
  std::size_t n = static_cast<std::size_t>(g.n());
  t.tree_edges = EdgeSet(static_cast<std::size_t>(g.m()));
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  t.depth.assign(n, -1);
  if (g.n() == 0) return t;

  std::queue<int> q;
  q.push(0);
  t.depth[0] = 0;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& inc : g.incident(v)) {
      if (t.depth[static_cast<std::size_t>(inc.to)] >= 0) continue;
      t.depth[static_cast<std::size_t>(inc.to)] = t.depth[static_cast<std::size_t>(v)] + 1;
      t.parent[static_cast<std::size_t>(inc.to)] = v;
      t.parent_edge[static_cast<std::size_t>(inc.to)] = inc.edge;
      t.tree_edges.set(inc.edge);
      ++reached;
      q.push(inc.to);
    }
  }
  if (reached != g.n()) fail(ErrorCode::DisconnectedGraph, "graph is not connected");
  return t;
}

CycleBasis fundamental_basis(const Graph& g) {
  SpanningTree t = spanning_tree(g);
  CycleBasis basis;
  for (int e = 0; e < g.m(); ++e) {
    if (t.tree_edges.test(e)) continue;
    // Chord plus the tree path between its endpoints.
    EdgeSet es(static_cast<std::size_t>(g.m()));
    es.set(e);
    int a = g.edge(e).u;
    int b = g.edge(e).v;
    while (t.depth[static_cast<std::size_t>(a)] > t.depth[static_cast<std::size_t>(b)]) {
      es.set(t.parent_edge[static_cast<std::size_t>(a)]);
      a = t.parent[static_cast<std::size_t>(a)];
    }
    while (t.depth[static_cast<std::size_t>(b)] > t.depth[static_cast<std::size_t>(a)]) {
      es.set(t.parent_edge[static_cast<std::size_t>(b)]);
      b = t.parent[static_cast<std::size_t>(b)];
    }
    while (a != b) {
      es.set(t.parent_edge[static_cast<std::size_t>(a)]);
      a = t.parent[static_cast<std::size_t>(a)];
      es.set(t.parent_edge[static_cast<std::size_t>(b)]);
      b = t.parent[static_cast<std::size_t>(b)];
    }
    basis.cycles.push_back(cycle_from_edge_set(g, es));
  }
  return basis;
}

bool is_cycle_basis(const Graph& g, const std::vector<Cycle>& cycles) {
  long long want = static_cast<long long>(g.m()) - g.n() + 1;
  if (static_cast<long long>(cycles.size()) != want) return false;
  std::vector<EdgeSet> vecs;
  vecs.reserve(cycles.size());
  for (const Cycle& c : cycles) vecs.push_back(c.edges);
  return gf2_rank(vecs) == static_cast<int>(cycles.size());
}

bool span_contains(const CycleBasis& basis, const EdgeSet& es) {
  Gf2Basis b;
  for (const Cycle& c : basis.cycles) {
    if (c.edges.universe() != es.universe())
      fail(ErrorCode::DimensionMismatch, "basis and edge set disagree on edge count");
    b.insert(c.edges);
  }
  return b.contains(es);
}

double total_weight(const CycleBasis& basis) {
  double w = 0.0;
  for (const Cycle& c : basis.cycles) w += c.weight;
  return w;
}

std::string basis_to_text(const CycleBasis& basis) {
  std::ostringstream out;
  for (const Cycle& c : basis.cycles) {
    for (std::size_t i = 0; i < c.walk.size(); ++i) {
      if (i) out << ' ';
      out << c.walk[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace grin
