#include "grin/mcb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <unordered_set>

namespace grin {

namespace {

struct ShortestPaths {
  std::vector<double> dist;
  std::vector<int> parent_edge;  // -1 at source or unreachable
  std::vector<int> parent;
};

// Dijkstra with deterministic tie-breaking: the priority queue orders by
// (distance, vertex id) and relaxations only act on strict improvement.
ShortestPaths dijkstra(const Graph& g, int source) {
  std::size_t n = static_cast<std::size_t>(g.n());
  ShortestPaths sp;
  sp.dist.assign(n, std::numeric_limits<double>::infinity());
  sp.parent_edge.assign(n, -1);
  sp.parent.assign(n, -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  sp.dist[static_cast<std::size_t>(source)] = 0.0;
  pq.emplace(0.0, source);
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > sp.dist[static_cast<std::size_t>(v)]) continue;
    for (const auto& inc : g.incident(v)) {
      double nd = d + g.edge(inc.edge).weight;
      if (nd < sp.dist[static_cast<std::size_t>(inc.to)]) {
        sp.dist[static_cast<std::size_t>(inc.to)] = nd;
        sp.parent[static_cast<std::size_t>(inc.to)] = v;
        sp.parent_edge[static_cast<std::size_t>(inc.to)] = inc.edge;
        pq.emplace(nd, inc.to);
      }
    }
  }
  return sp;
}

void add_path_edges(const ShortestPaths& sp, int to, EdgeSet& es) {
  while (sp.parent_edge[static_cast<std::size_t>(to)] >= 0) {
    // xor semantics: shared prefix edges of the two endpoint paths cancel
    if (es.test(sp.parent_edge[static_cast<std::size_t>(to)]))
      es.reset(sp.parent_edge[static_cast<std::size_t>(to)]);
    else
      es.set(sp.parent_edge[static_cast<std::size_t>(to)]);
    to = sp.parent[static_cast<std::size_t>(to)];
  }
}

std::vector<Cycle> candidates_for_source(const Graph& g, int v) {
  std::vector<Cycle> out;
  ShortestPaths sp = dijkstra(g, v);
  for (int e = 0; e < g.m(); ++e) {
    int x = g.edge(e).u;
    int y = g.edge(e).v;
    if (std::isinf(sp.dist[static_cast<std::size_t>(x)]) ||
        std::isinf(sp.dist[static_cast<std::size_t>(y)]))
      continue;
    EdgeSet es(static_cast<std::size_t>(g.m()));
    add_path_edges(sp, x, es);
    add_path_edges(sp, y, es);
    if (es.test(e))
      es.reset(e);
    else
      es.set(e);
    if (es.empty()) continue;
    if (auto c = try_cycle_from_edge_set(g, es)) out.push_back(std::move(*c));
  }
  return out;
}

bool candidate_less(const Cycle& a, const Cycle& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.order() != b.order()) return a.order() < b.order();
  return a.edges.lex_less(b.edges);
}

std::vector<Cycle> collect_candidates(const Graph& g, bool parallel) {
  std::vector<std::vector<Cycle>> per_source(static_cast<std::size_t>(g.n()));
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int v = 0; v < g.n(); ++v) per_source[static_cast<std::size_t>(v)] = candidates_for_source(g, v);
  } else {
    for (int v = 0; v < g.n(); ++v) per_source[static_cast<std::size_t>(v)] = candidates_for_source(g, v);
  }

  // Merge in source order, drop duplicate edge sets, sort.
  std::vector<Cycle> all;
  std::unordered_set<EdgeSet, EdgeSetHash> seen;
  for (auto& chunk : per_source) {
    for (Cycle& c : chunk) {
      if (seen.insert(c.edges).second) all.push_back(std::move(c));
    }
  }
  std::stable_sort(all.begin(), all.end(), candidate_less);
  return all;
}

CycleBasis sieve(const Graph& g, std::vector<Cycle> candidates) {
  long long dim = static_cast<long long>(g.m()) - g.n() + 1;
  CycleBasis basis;
  if (dim <= 0) return basis;
  Gf2Basis rows;
  for (Cycle& c : candidates) {
    if (rows.insert(c.edges)) {
      basis.cycles.push_back(std::move(c));
      if (static_cast<long long>(basis.cycles.size()) == dim) return basis;
    }
  }
  fail(ErrorCode::Internal, "Horton candidate set did not span the cycle space");
}

}  // namespace

std::vector<Cycle> horton_candidates(const Graph& g) { return collect_candidates(g, true); }

std::vector<Cycle> horton_candidates_serial(const Graph& g) { return collect_candidates(g, false); }

CycleBasis horton_mcb(const Graph& g) {
  if (!is_connected(g)) fail(ErrorCode::DisconnectedGraph, "minimum cycle basis needs a connected graph");
  return sieve(g, horton_candidates(g));
}

CycleBasis horton_mcb_serial(const Graph& g) {
  if (!is_connected(g)) fail(ErrorCode::DisconnectedGraph, "minimum cycle basis needs a connected graph");
  return sieve(g, horton_candidates_serial(g));
}

}  // namespace grin
