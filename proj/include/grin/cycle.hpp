#ifndef GRIN_CYCLE_HPP
#define GRIN_CYCLE_HPP

#include <optional>
#include <vector>

#include "grin/edge_set.hpp"
#include "grin/graph.hpp"

namespace grin {

/// A validated simple cycle: every touched vertex has degree exactly 2 in
/// `edges` and the touched vertices form one connected component. The walk is
/// canonical: it starts at the smallest vertex and continues toward its
/// smaller neighbour, so equal edge sets produce equal walks.
struct Cycle {
  EdgeSet edges;
  std::vector<int> walk;
  double weight = 0.0;

  int order() const { return static_cast<int>(walk.size()); }
  bool operator==(const Cycle& other) const { return edges == other.edges; }
};

/// Returns the validated cycle, or nullopt when `es` is empty, not 2-regular
/// on its support, or a disjoint union of cycles.
std::optional<Cycle> try_cycle_from_edge_set(const Graph& g, const EdgeSet& es);

/// Throwing variant distinguishing the failure: EmptyEdgeSet, NotTwoRegular
/// (some supported vertex has degree != 2) or DisconnectedCycle (an even-degree
/// generalized cycle that splits into two or more simple cycles).
Cycle cycle_from_edge_set(const Graph& g, const EdgeSet& es);

/// Builds a cycle from an explicit closed vertex walk (v0 v1 ... vk-1, edge
/// vk-1->v0 implied). Every consecutive pair must be an edge of g.
Cycle cycle_from_walk(const Graph& g, const std::vector<int>& walk);

/// Bit mask over vertices touched by the cycle.
std::vector<char> vertex_mask(const Graph& g, const Cycle& c);

}  // namespace grin

#endif
