#ifndef GRIN_GENERATE_HPP
#define GRIN_GENERATE_HPP

#include <cstdint>
#include <functional>

#include "grin/graph.hpp"

namespace grin {

/// Seeded G(n, p): unordered pairs are visited in lexicographic order
/// (0,1), (0,2), ..., (n-2,n-1); each is included iff the next draw from a
/// mersenne-twister-64 seeded with `seed` is below p. Draws are made as
/// 53-bit uniforms ((x >> 11) * 2^-53) rather than through distribution
/// objects, so identical (n, p, seed) give identical graphs on every
/// platform.
Graph generate_gnp(int n, double p, std::uint64_t seed);

/// Labeled graph on n vertices whose edge set is the given bit mask over the
/// lexicographically ordered pairs (same order as generate_gnp).
Graph graph_from_mask(int n, std::uint64_t mask);

/// Visits every labeled graph on n vertices exactly once, in edge-mask order,
/// optionally restricted to connected graphs. n <= 7 (2^21 masks).
void enumerate_labeled_graphs(int n, bool connected_only,
                              const std::function<void(const Graph&, std::uint64_t mask)>& visit);

/// Number of masks enumerate_labeled_graphs would visit.
std::uint64_t count_labeled_graphs(int n, bool connected_only);

}  // namespace grin

#endif
