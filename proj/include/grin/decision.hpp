#ifndef GRIN_DECISION_HPP
#define GRIN_DECISION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "grin/cycle.hpp"
#include "grin/grinberg.hpp"
#include "grin/removal.hpp"

namespace grin {

enum class Outcome { Hamiltonian, ClaimedHamiltonianUnverified, NonHamiltonian };

enum class NonHamReason {
  None,
  Disconnected,
  NoSolution,          // the Grinberg equation has no solution over the pool
  IrremovableCluster,  // three+ touching irremovable cycles with private edges
  OverloadedVertex,    // a vertex with three or more private edges
  LockedSharedCycle,   // forced deletion of an undeletable all-shared cycle
  StuckDeletion,       // every solution's deletion sequence dead-ends
};

const char* to_string(Outcome o);
const char* to_string(NonHamReason r);

struct Verdict {
  Outcome outcome = Outcome::NonHamiltonian;
  NonHamReason reason = NonHamReason::None;
  std::optional<Cycle> certificate;  // always present and verified for Hamiltonian
};

struct OracleResult {
  enum class Status { Hamiltonian, NonHamiltonian, BudgetExceeded };
  Status status = Status::NonHamiltonian;
  std::optional<Cycle> certificate;
  std::uint64_t nodes = 0;
};

const char* to_string(OracleResult::Status s);

/// Exact Hamiltonicity search: depth-first edge selection with
/// propagate_rules at every node plus connectivity/cut-vertex pruning of the
/// non-forbidden subgraph. budget limits search nodes (0 = unlimited);
/// exceeding it is reported distinctly from a definitive "no".
OracleResult oracle_hamiltonian(const Graph& g, std::uint64_t budget = 10'000'000);

/// True iff the walk visits every vertex exactly once, every step is an edge
/// of g, and the cycle's edge set matches the walk.
bool verify_certificate(const Graph& g, const Cycle& c);

/// GF(2) sum of the cycles' edge sets (the empty set for an empty list).
EdgeSet xor_all(const Graph& g, const std::vector<Cycle>& cycles);

struct TraceEvent {
  std::string kind;
  nlohmann::json data;
};

struct AttemptLog {
  std::size_t solution_index = 0;
  std::vector<int> solution;   // pool indices
  std::vector<int> deleted;    // pool indices, in deletion order
  std::vector<int> remaining;  // pool indices left when the attempt ended
  std::string outcome;         // "hamiltonian" | "unverified" | "stuck"
};

/// Replayable record of one decide() run: applying `deleted` of any attempt
/// to the pool reproduces that attempt's `remaining`.
struct TraceLog {
  std::string pool_id;
  std::vector<std::vector<int>> pool_walks;
  std::size_t solution_count = 0;
  bool solutions_truncated = false;
  std::vector<AttemptLog> attempts;
  std::vector<TraceEvent> events;
};

struct DecideResult {
  Verdict verdict;
  TraceLog trace;
};

/// The decision pipeline: reject disconnected graphs; build the configured
/// cycle pool; enumerate Grinberg solutions (empty = non-Hamiltonian);
/// test pool-level obstructions; then, per solution, repeatedly delete a
/// complement cycle that is removable and whose deletion keeps every other
/// remaining complement cycle removable. A fully reduced solution's GF(2)
/// sum is validated as a Hamilton cycle; validation failure is reported as
/// ClaimedHamiltonianUnverified rather than hidden.
DecideResult decide(const Graph& g, const SolutionConfig& cfg = {});

/// Pool construction behind decide(), exposed for the CLI and tests.
std::vector<Cycle> build_pool(const Graph& g, const SolutionConfig& cfg);
std::string pool_id(const SolutionConfig& cfg, int n);

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const TraceLog& t);

}  // namespace grin

#endif
