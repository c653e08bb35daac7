#ifndef GRIN_GRINBERG_HPP
#define GRIN_GRINBERG_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "grin/cycle.hpp"

namespace grin {

/// Face degrees of a planar drawing split by a Hamilton cycle, as supplied by
/// the caller. All degrees must be >= 3.
struct FaceSpec {
  std::vector<int> inside_degrees;
  std::vector<int> outside_degrees;
};

/// Grinberg's planar criterion: sum of (i - 2) * (inside_i - outside_i).
/// A Hamilton cycle with this face split requires the sum to be zero.
long long planar_criterion_sum(const FaceSpec& spec);

/// Residual of the Grinberg equation for a multiset of cycle orders:
/// sum(order - 2) - (n - 2). Zero iff the multiset satisfies the equation.
long long equation_residual(const std::vector<int>& cycle_orders, int n);

enum class PoolKind { Mcb, FundamentalBasis, AllCyclesUpTo };

struct SolutionConfig {
  PoolKind pool_kind = PoolKind::Mcb;
  int all_cycles_bound = 0;  // 0 = graph order
  int max_solutions = 10000;
  bool deterministic_order = true;
};

/// A split of a cycle pool: the selected side satisfies the Grinberg
/// equation (sum of (order - 2) over `solution` equals n - 2), the
/// complement is everything else. Indices refer into the pool.
struct GrinbergSolution {
  std::vector<int> solution;
  std::vector<int> complement;
  std::string pool_id;
};

struct SolutionSet {
  std::vector<GrinbergSolution> solutions;
  bool truncated = false;
};

/// All non-empty subsets S of the pool with sum over S of (order - 2) equal
/// to n - 2, enumerated depth-first by pool index (so output order is the
/// lexicographic order of the index subsets), capped at cfg.max_solutions
/// with an explicit truncation flag. An empty result means no Hamilton set
/// can exist over this pool.
SolutionSet enumerate_solutions(const std::vector<Cycle>& pool, int n, const SolutionConfig& cfg,
                                const std::string& pool_id = "custom");

/// Identity every Hamilton set satisfies: sum of orders - 2*(count - 1) == n.
bool verify_hamilton_set_identity(const std::vector<Cycle>& cycles, int n);

/// Exact inclusion-exclusion bookkeeping over the cycles' vertex sets, plus
/// the combinatorial-shape checks a Hamilton set is assumed to satisfy: every
/// pair of cycles sharing an edge meets in exactly 2 vertices and 1 edge, and
/// the sharing graph (cycles as nodes, edge-sharing pairs as links) is a tree.
struct InclusionExclusionAudit {
  long long union_size = 0;
  /// intersection_sums[t-1] = sum over all t-subsets A of |intersection of
  /// the vertex sets of A|, for t = 1..count.
  std::vector<long long> intersection_sums;
  long long jointed_pair_sum = 0;  // sum of |Va ∩ Vb| over edge-sharing pairs
  int jointed_pair_count = 0;
  bool pairs_share_two_vertices_one_edge = true;
  bool sharing_graph_is_tree = false;
  bool hamilton_shape = false;
};

InclusionExclusionAudit inclusion_exclusion_audit(const Graph& g, const std::vector<Cycle>& cycles);

/// Record form: pool id, target n - 2, (index, order) per side.
nlohmann::json solution_to_json(const GrinbergSolution& s, const std::vector<Cycle>& pool, int n);

}  // namespace grin

#endif
