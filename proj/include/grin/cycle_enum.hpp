#ifndef GRIN_CYCLE_ENUM_HPP
#define GRIN_CYCLE_ENUM_HPP

#include "grin/cycle.hpp"

namespace grin {

/// Every simple cycle of g with order <= max_order (0 = no bound), each
/// exactly once, in deterministic order: cycles are rooted at their smallest
/// vertex, explored depth-first by ascending neighbour id, and emitted with
/// the direction whose second vertex is smaller than its last.
std::vector<Cycle> all_simple_cycles(const Graph& g, int max_order = 0);

}  // namespace grin

#endif
