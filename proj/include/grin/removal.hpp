#ifndef GRIN_REMOVAL_HPP
#define GRIN_REMOVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "grin/cycle.hpp"
#include "grin/grinberg.hpp"

namespace grin {

/// Per-edge count of how many cycles of a working set contain the edge.
/// An edge with count 1 is private to one cycle, count 2 is shared by two.
struct MultiplicityMap {
  std::vector<int> count;
};

MultiplicityMap edge_multiplicities(const std::vector<Cycle>& working_set, const Graph& g);

/// Interior: every incident support edge is shared by exactly two cycles.
/// Boundary: the vertex has exactly two support edges and both are private.
/// Mixed: anything else.
enum class VertexClass { Interior, Boundary, Mixed };

/// Classifies v over the edges with count >= 1; IsolatedInSet when v has no
/// incident support edge.
VertexClass classify_vertex(int v, const MultiplicityMap& mm, const Graph& g);

enum class EdgeStatus : unsigned char { Undecided, Required, Forbidden };

struct ConstraintState {
  std::vector<EdgeStatus> status;

  static ConstraintState all_undecided(const Graph& g);
};

struct Contradiction {
  int rule = 0;    // 1, 2 or 3
  int vertex = -1;
  int edge = -1;
  std::string detail;
};

struct PropagationStats {
  long long rule1 = 0;  // edges forced Required
  long long rule2 = 0;  // edges forbidden to avoid a proper subcycle
  long long rule3 = 0;  // edges forbidden at saturated vertices
};

/// Least fixed point of the Hamilton-cycle construction rules:
///   1. a vertex with exactly two non-forbidden edges needs both;
///   2. no proper subcycle may form among required edges, and an undecided
///      edge that would close one is forbidden;
///   3. a vertex with two required edges forbids its other edges.
/// A vertex with fewer than two usable edges or more than two required edges
/// is a contradiction. Mutates `state` in place; Required/Forbidden only grow.
std::optional<Contradiction> propagate_rules(const Graph& g, ConstraintState& state,
                                             PropagationStats* stats = nullptr);

struct RemovabilityReason {
  enum class Kind { CoverageLoss, OverloadedVertex, RulesContradiction };
  Kind kind;
  std::vector<int> vertices;
  std::optional<Contradiction> contradiction;
};

struct RemovabilityReport {
  bool removable = false;
  std::vector<RemovabilityReason> reasons;
};

/// A cycle is removable from the working set when, after deleting it,
/// (a) every vertex of g is still covered by some remaining cycle,
/// (b) no vertex gains three or more private edges, and
/// (c) requiring the remaining private edges and forbidding unused edges
///     survives propagate_rules.
/// Throws CycleNotInSet when c is not a member (by edge-set equality).
RemovabilityReport is_removable(const Cycle& c, const std::vector<Cycle>& working_set,
                                const Graph& g);
RemovabilityReport is_removable_at(std::size_t index, const std::vector<Cycle>& working_set,
                                   const Graph& g);

/// Removability of working_set[index] evaluated as if working_set[pre_removed]
/// were already deleted. Look-ahead helper for the deletion pipeline; avoids
/// materializing the reduced set.
RemovabilityReport is_removable_excluding(std::size_t index, std::size_t pre_removed,
                                          const std::vector<Cycle>& working_set, const Graph& g);

/// Lowest-index vertex with >= 3 incident private (count 1) edges, if any.
/// Such a vertex cannot lie on a Hamilton cycle built from the set.
std::optional<int> find_overloaded_vertex(const MultiplicityMap& mm, const Graph& g);

/// True iff the working set contains three or more cycles that are
/// irremovable, carry at least one private edge, and pairwise share a vertex
/// or an edge. A graph whose working set has such a cluster is
/// non-Hamiltonian.
bool has_irremovable_cluster(const std::vector<Cycle>& working_set, const Graph& g);

/// Non-Hamiltonicity witness: when the equation has exactly one solution,
/// no cycle of the working set is removable, and some complement cycle has
/// every edge shared (no private edge), that cycle's deletion is forced yet
/// impossible. Returns its index into the working set.
std::optional<std::size_t> find_locked_shared_cycle(const std::vector<Cycle>& working_set,
                                                    const std::vector<GrinbergSolution>& solutions,
                                                    const Graph& g);

}  // namespace grin

#endif
