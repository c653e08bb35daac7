#include "grin/cycle_enum.hpp"

#include <algorithm>

namespace grin {

namespace {

struct Enumerator {
  const Graph& g;
  int max_order;
  int root = 0;
  std::vector<std::vector<Graph::Incidence>> adj;  // sorted by neighbour id
  std::vector<int> path;
  std::vector<int> path_edges;
  std::vector<char> on_path;
  std::vector<Cycle>& out;

  Enumerator(const Graph& g0, int bound, std::vector<Cycle>& sink)
      : g(g0), max_order(bound), on_path(static_cast<std::size_t>(g0.n()), 0), out(sink) {
    adj.reserve(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
      auto inc = g.incident(v);
      std::sort(inc.begin(), inc.end(),
                [](const Graph::Incidence& a, const Graph::Incidence& b) { return a.to < b.to; });
      adj.push_back(std::move(inc));
    }
  }

  void emit_cycle(int closing_edge) {
    // Direction canonicalization: keep the orientation whose second vertex
    // is the smaller of the two root neighbours on the cycle.
    if (path[1] > path.back()) return;
    EdgeSet es(static_cast<std::size_t>(g.m()));
    double w = 0.0;
    for (int e : path_edges) {
      es.set(e);
      w += g.edge(e).weight;
    }
    es.set(closing_edge);
    w += g.edge(closing_edge).weight;
    Cycle c;
    c.edges = std::move(es);
    c.walk = path;
    c.weight = w;
    out.push_back(std::move(c));
  }

  void extend() {
    int at = path.back();
    for (const auto& inc : adj[static_cast<std::size_t>(at)]) {
      if (inc.to == root) {
        if (path.size() >= 3) emit_cycle(inc.edge);
        continue;
      }
      if (inc.to < root || on_path[static_cast<std::size_t>(inc.to)]) continue;
      if (max_order > 0 && static_cast<int>(path.size()) >= max_order) continue;
      on_path[static_cast<std::size_t>(inc.to)] = 1;
      path.push_back(inc.to);
      path_edges.push_back(inc.edge);
      extend();
      path.pop_back();
      path_edges.pop_back();
      on_path[static_cast<std::size_t>(inc.to)] = 0;
    }
  }

  void run() {
    for (root = 0; root < g.n(); ++root) {
      path.assign(1, root);
      path_edges.clear();
      on_path.assign(static_cast<std::size_t>(g.n()), 0);
      on_path[static_cast<std::size_t>(root)] = 1;
      extend();
    }
  }
};

}  // namespace

std::vector<Cycle> all_simple_cycles(const Graph& g, int max_order) {
  std::vector<Cycle> out;
  Enumerator e(g, max_order, out);
  e.run();
  return out;
}

}  // namespace grin
