#include "grin/cycle.hpp"

#include <algorithm>

namespace grin {

namespace {

enum class ShapeCheck { Ok, Empty, NotTwoRegular, Disconnected };

// Walk extraction shared by the optional and throwing entry points.
ShapeCheck extract_walk(const Graph& g, const EdgeSet& es, std::vector<int>& walk, double& weight) {
  if (es.empty()) return ShapeCheck::Empty;

  std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
  weight = 0.0;
  int start = g.n();
  std::size_t edge_count = 0;
  bool two_regular = true;
  es.for_each([&](int e) {
    const Edge& ed = g.edge(e);
    ++deg[static_cast<std::size_t>(ed.u)];
    ++deg[static_cast<std::size_t>(ed.v)];
    weight += ed.weight;
    ++edge_count;
    start = std::min(start, ed.u);
  });
  for (int v = 0; v < g.n(); ++v) {
    if (deg[static_cast<std::size_t>(v)] != 0 && deg[static_cast<std::size_t>(v)] != 2)
      two_regular = false;
  }
  if (!two_regular) return ShapeCheck::NotTwoRegular;

  // Canonical traversal: begin at the smallest touched vertex, step toward
  // the smaller of its two neighbours.
  walk.clear();
  walk.reserve(edge_count);
  int prev_edge = -1;
  int at = start;
  do {
    walk.push_back(at);
    int best_to = -1, best_edge = -1;
    for (const auto& inc : g.incident(at)) {
      if (!es.test(inc.edge) || inc.edge == prev_edge) continue;
      if (best_to < 0 || inc.to < best_to) {
        best_to = inc.to;
        best_edge = inc.edge;
      }
    }
    at = best_to;
    prev_edge = best_edge;
  } while (at != start);

  if (walk.size() != edge_count) return ShapeCheck::Disconnected;
  return ShapeCheck::Ok;
}

}  // namespace

std::optional<Cycle> try_cycle_from_edge_set(const Graph& g, const EdgeSet& es) {
  Cycle c;
  c.edges = es;
  if (extract_walk(g, es, c.walk, c.weight) != ShapeCheck::Ok) return std::nullopt;
  return c;
}

Cycle cycle_from_edge_set(const Graph& g, const EdgeSet& es) {
  Cycle c;
  c.edges = es;
  switch (extract_walk(g, es, c.walk, c.weight)) {
    case ShapeCheck::Ok:
      return c;
    case ShapeCheck::Empty:
      fail(ErrorCode::EmptyEdgeSet, "cannot build a cycle from the zero vector");
    case ShapeCheck::NotTwoRegular:
      fail(ErrorCode::NotTwoRegular, "a supported vertex has degree != 2");
    case ShapeCheck::Disconnected:
      fail(ErrorCode::DisconnectedCycle, "edge set is a disjoint union of cycles, not a simple cycle");
  }
  fail(ErrorCode::Internal, "unreachable");
}

Cycle cycle_from_walk(const Graph& g, const std::vector<int>& walk) {
  if (walk.size() < 3) fail(ErrorCode::InvalidArgument, "cycle walk needs at least 3 vertices");
  EdgeSet es(static_cast<std::size_t>(g.m()));
  for (std::size_t i = 0; i < walk.size(); ++i) {
    int u = walk[i];
    int v = walk[(i + 1) % walk.size()];
    int e = g.find_edge(u, v);
    if (e < 0)
      fail(ErrorCode::InvalidArgument,
           "walk step {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    if (es.test(e)) fail(ErrorCode::InvalidArgument, "walk repeats an edge");
    es.set(e);
  }
  return cycle_from_edge_set(g, es);
}

std::vector<char> vertex_mask(const Graph& g, const Cycle& c) {
  std::vector<char> mask(static_cast<std::size_t>(g.n()), 0);
  for (int v : c.walk) mask[static_cast<std::size_t>(v)] = 1;
  return mask;
}

}  // namespace grin
