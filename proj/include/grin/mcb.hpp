#ifndef GRIN_MCB_HPP
#define GRIN_MCB_HPP

#include "grin/cycle_basis.hpp"

namespace grin {

/// Horton candidate cycles: for every vertex v and edge {x,y}, the edge set
/// shortest-path(v,x) xor shortest-path(v,y) xor {x,y}, kept when it is a
/// simple cycle, deduplicated, and sorted by (weight, order, lexicographic
/// edge ids). Candidate generation runs one Dijkstra per source vertex; the
/// parallel variant distributes sources across OpenMP threads and merges in
/// vertex order, so both variants return identical lists.
std::vector<Cycle> horton_candidates(const Graph& g);
std::vector<Cycle> horton_candidates_serial(const Graph& g);

/// Minimum cycle basis: greedy GF(2) independence sieve over the sorted
/// Horton candidates. Deterministic; throws DisconnectedGraph on
/// disconnected input.
CycleBasis horton_mcb(const Graph& g);

/// Serial reference implementation, kept for cross-checking and benchmarks.
CycleBasis horton_mcb_serial(const Graph& g);

}  // namespace grin

#endif
