#ifndef GRIN_CYCLE_BASIS_HPP
#define GRIN_CYCLE_BASIS_HPP

#include <string>
#include <vector>

#include "grin/cycle.hpp"

namespace grin {

/// BFS tree rooted at vertex 0.
struct SpanningTree {
  EdgeSet tree_edges;
  std::vector<int> parent;       // -1 at the root
  std::vector<int> parent_edge;  // -1 at the root
  std::vector<int> depth;
};

/// Throws DisconnectedGraph when some vertex is unreachable from 0.
SpanningTree spanning_tree(const Graph& g);

struct CycleBasis {
  std::vector<Cycle> cycles;
};

/// One fundamental cycle per non-tree edge, in edge-id order. Exactly
/// m - n + 1 cycles for a connected graph.
CycleBasis fundamental_basis(const Graph& g);

/// True iff the list has m - n + 1 members and full GF(2) rank.
bool is_cycle_basis(const Graph& g, const std::vector<Cycle>& cycles);

/// True iff es is a GF(2) combination of the basis cycles.
bool span_contains(const CycleBasis& basis, const EdgeSet& es);

double total_weight(const CycleBasis& basis);

/// Plain-text block: one cycle per line, "v0 v1 ... vk-1".
std::string basis_to_text(const CycleBasis& basis);

}  // namespace grin

#endif
