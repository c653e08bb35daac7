// Test-side oracles, written independently of the library implementations
// they check.
#ifndef GRIN_TESTS_SUPPORT_HPP
#define GRIN_TESTS_SUPPORT_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grin/cycle.hpp"
#include "grin/errors.hpp"
#include "grin/graph.hpp"

namespace testsup {

/// Permutation-search Hamiltonicity: fixes vertex 0, tries every ordering of
/// the rest. Usable up to n ~ 9.
std::optional<std::vector<int>> naive_hamilton_walk(const grin::Graph& g);

/// All simple cycles as edge-id lists, via path enumeration rooted at each
/// cycle's smallest vertex. Independent of grin::all_simple_cycles.
std::vector<std::vector<int>> enumerate_cycles_by_paths(const grin::Graph& g);

/// All simple cycles found by scanning every edge subset (2^m); n <= 5 scale.
std::vector<std::vector<int>> enumerate_cycles_by_subsets(const grin::Graph& g);

/// Minimum total weight of an independent cycle set of full rank: greedy
/// rank sieve over ALL simple cycles sorted by (weight, size, lexicographic
/// edge ids), with its own elimination code.
double brute_mcb_weight(const grin::Graph& g);

/// graph6 encoder written from the format description, separately from
/// grin::encode_graph6.
std::string independent_graph6(const grin::Graph& g);

/// Vertices reachable from 0 by breadth-first traversal.
int bfs_reachable_count(const grin::Graph& g);

/// A polygon on n vertices subdivided by random non-crossing chords, plus its
/// interior faces as cycles of the resulting graph.
struct SubdividedPolygon {
  grin::Graph graph;
  std::vector<grin::Cycle> faces;
};
SubdividedPolygon random_subdivided_polygon(int n, std::uint64_t seed);

/// The n-2 triangles of the catalog fan(n) graph.
std::vector<grin::Cycle> fan_triangles(const grin::Graph& fan, int n);

/// Error code thrown by f, if any.
template <class F>
std::optional<grin::ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const grin::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testsup

#endif
