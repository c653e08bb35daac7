#include "grin/decision.hpp"

#include <algorithm>

#include "grin/cycle_enum.hpp"
#include "grin/mcb.hpp"

namespace grin {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Hamiltonian: return "hamiltonian";
    case Outcome::ClaimedHamiltonianUnverified: return "claimed_hamiltonian_unverified";
    case Outcome::NonHamiltonian: return "non_hamiltonian";
  }
  return "?";
}

const char* to_string(NonHamReason r) {
  switch (r) {
    case NonHamReason::None: return "none";
    case NonHamReason::Disconnected: return "disconnected";
    case NonHamReason::NoSolution: return "no_solution";
    case NonHamReason::IrremovableCluster: return "irremovable_cluster";
    case NonHamReason::OverloadedVertex: return "overloaded_vertex";
    case NonHamReason::LockedSharedCycle: return "locked_shared_cycle";
    case NonHamReason::StuckDeletion: return "stuck_deletion";
  }
  return "?";
}

const char* to_string(OracleResult::Status s) {
  switch (s) {
    case OracleResult::Status::Hamiltonian: return "hamiltonian";
    case OracleResult::Status::NonHamiltonian: return "non_hamiltonian";
    case OracleResult::Status::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

bool verify_certificate(const Graph& g, const Cycle& c) {
  if (g.n() < 3) return false;
  if (static_cast<int>(c.walk.size()) != g.n()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (int v : c.walk) {
    if (v < 0 || v >= g.n() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  if (c.edges.universe() != static_cast<std::size_t>(g.m())) return false;
  EdgeSet from_walk(static_cast<std::size_t>(g.m()));
  for (std::size_t i = 0; i < c.walk.size(); ++i) {
    int e = g.find_edge(c.walk[i], c.walk[(i + 1) % c.walk.size()]);
    if (e < 0) return false;
    from_walk.set(e);
  }
  return from_walk == c.edges;
}

EdgeSet xor_all(const Graph& g, const std::vector<Cycle>& cycles) {
  EdgeSet acc(static_cast<std::size_t>(g.m()));
  for (const Cycle& c : cycles) acc ^= c.edges;
  return acc;
}

namespace {

// Cut-vertex / connectivity prune: a Hamilton cycle needs the non-forbidden
// subgraph to be 2-connected (a spanning cycle tolerates no cut vertex).
bool available_graph_viable(const Graph& g, const ConstraintState& state) {
  int n = g.n();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  int timer = 0, visited = 0, root_children = 0;
  bool cut = false;

  auto dfs = [&](auto&& self, int v, int parent_edge) -> void {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
    ++visited;
    for (const auto& inc : g.incident(v)) {
      if (cut) return;
      if (state.status[static_cast<std::size_t>(inc.edge)] == EdgeStatus::Forbidden) continue;
      if (inc.edge == parent_edge) continue;
      if (disc[static_cast<std::size_t>(inc.to)] < 0) {
        if (v == 0) ++root_children;
        self(self, inc.to, inc.edge);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(inc.to)]);
        if (v != 0 && low[static_cast<std::size_t>(inc.to)] >= disc[static_cast<std::size_t>(v)])
          cut = true;
      } else {
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(inc.to)]);
      }
    }
  };
  dfs(dfs, 0, -1);
  return !cut && visited == n && root_children <= 1;
}

struct OracleSearch {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  std::optional<Cycle> found;

  OracleSearch(const Graph& g0, std::uint64_t b) : g(g0), budget(b) {}

  // Lowest-id undecided edge at the most constrained undersaturated vertex.
  int pick_branch_edge(const ConstraintState& state) const {
    std::vector<int> req(static_cast<std::size_t>(g.n()), 0), avail(static_cast<std::size_t>(g.n()), 0);
    for (int e = 0; e < g.m(); ++e) {
      if (state.status[static_cast<std::size_t>(e)] == EdgeStatus::Required) {
        ++req[static_cast<std::size_t>(g.edge(e).u)];
        ++req[static_cast<std::size_t>(g.edge(e).v)];
      }
      if (state.status[static_cast<std::size_t>(e)] != EdgeStatus::Forbidden) {
        ++avail[static_cast<std::size_t>(g.edge(e).u)];
        ++avail[static_cast<std::size_t>(g.edge(e).v)];
      }
    }
    int best_v = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (req[static_cast<std::size_t>(v)] >= 2) continue;
      bool has_undecided = false;
      for (const auto& inc : g.incident(v))
        if (state.status[static_cast<std::size_t>(inc.edge)] == EdgeStatus::Undecided) {
          has_undecided = true;
          break;
        }
      if (!has_undecided) continue;
      if (best_v < 0 || avail[static_cast<std::size_t>(v)] < avail[static_cast<std::size_t>(best_v)])
        best_v = v;
    }
    if (best_v < 0) return -1;
    int best_e = -1;
    for (const auto& inc : g.incident(best_v))
      if (state.status[static_cast<std::size_t>(inc.edge)] == EdgeStatus::Undecided)
        if (best_e < 0 || inc.edge < best_e) best_e = inc.edge;
    return best_e;
  }

  bool search(ConstraintState state) {
    ++nodes;
    if (budget && nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (propagate_rules(g, state)) return false;
    if (!available_graph_viable(g, state)) return false;

    int e = pick_branch_edge(state);
    if (e < 0) {
      // Everything decided: the required edges are a spanning cycle.
      EdgeSet required(static_cast<std::size_t>(g.m()));
      for (int i = 0; i < g.m(); ++i)
        if (state.status[static_cast<std::size_t>(i)] == EdgeStatus::Required) required.set(i);
      auto c = try_cycle_from_edge_set(g, required);
      if (!c || c->order() != g.n() || !verify_certificate(g, *c))
        fail(ErrorCode::Internal, "search leaf did not yield a verified Hamilton cycle");
      found = std::move(*c);
      return true;
    }

    ConstraintState take = state;
    take.status[static_cast<std::size_t>(e)] = EdgeStatus::Required;
    if (search(std::move(take))) return true;
    if (out_of_budget) return false;

    state.status[static_cast<std::size_t>(e)] = EdgeStatus::Forbidden;
    return search(std::move(state));
  }
};

}  // namespace

OracleResult oracle_hamiltonian(const Graph& g, std::uint64_t budget) {
  OracleResult result;
  if (g.n() < 3) {
    result.status = OracleResult::Status::NonHamiltonian;
    return result;
  }
  if (!is_connected(g)) {
    result.status = OracleResult::Status::NonHamiltonian;
    return result;
  }
  OracleSearch search(g, budget);
  bool ok = search.search(ConstraintState::all_undecided(g));
  result.nodes = search.nodes;
  if (ok) {
    result.status = OracleResult::Status::Hamiltonian;
    result.certificate = std::move(search.found);
  } else if (search.out_of_budget) {
    result.status = OracleResult::Status::BudgetExceeded;
  } else {
    result.status = OracleResult::Status::NonHamiltonian;
  }
  return result;
}

std::vector<Cycle> build_pool(const Graph& g, const SolutionConfig& cfg) {
  switch (cfg.pool_kind) {
    case PoolKind::Mcb:
      return horton_mcb(g).cycles;
    case PoolKind::FundamentalBasis:
      return fundamental_basis(g).cycles;
    case PoolKind::AllCyclesUpTo:
      return all_simple_cycles(g, cfg.all_cycles_bound > 0 ? cfg.all_cycles_bound : g.n());
  }
  fail(ErrorCode::Internal, "unknown pool kind");
}

std::string pool_id(const SolutionConfig& cfg, int n) {
  switch (cfg.pool_kind) {
    case PoolKind::Mcb:
      return "mcb";
    case PoolKind::FundamentalBasis:
      return "fundamental";
    case PoolKind::AllCyclesUpTo:
      if (cfg.all_cycles_bound > 0) return "all:" + std::to_string(cfg.all_cycles_bound);
      return n > 0 ? "all:" + std::to_string(n) : "all:n";
  }
  return "?";
}

namespace {

std::vector<int> sorted_complement_positions(const std::vector<int>& ids,
                                             const std::vector<char>& in_solution) {
  std::vector<int> out;
  for (std::size_t p = 0; p < ids.size(); ++p)
    if (!in_solution[static_cast<std::size_t>(ids[p])]) out.push_back(static_cast<int>(p));
  return out;
}

}  // namespace

DecideResult decide(const Graph& g, const SolutionConfig& cfg) {
  DecideResult result;
  TraceLog& trace = result.trace;
  auto event = [&](std::string kind, nlohmann::json data) {
    trace.events.push_back(TraceEvent{std::move(kind), std::move(data)});
  };
  auto verdict = [&](Outcome o, NonHamReason r, std::optional<Cycle> cert = std::nullopt) {
    result.verdict.outcome = o;
    result.verdict.reason = r;
    result.verdict.certificate = std::move(cert);
    event("verdict", {{"outcome", to_string(o)}, {"reason", to_string(r)}});
    return result;
  };

  if (!is_connected(g)) return verdict(Outcome::NonHamiltonian, NonHamReason::Disconnected);

  std::vector<Cycle> pool = build_pool(g, cfg);
  trace.pool_id = pool_id(cfg, g.n());
  for (const Cycle& c : pool) trace.pool_walks.push_back(c.walk);
  event("pool", {{"id", trace.pool_id}, {"size", pool.size()}});

  SolutionSet sols = enumerate_solutions(pool, g.n(), cfg, trace.pool_id);
  trace.solution_count = sols.solutions.size();
  trace.solutions_truncated = sols.truncated;
  event("solutions", {{"count", sols.solutions.size()}, {"truncated", sols.truncated}});
  if (sols.solutions.empty()) return verdict(Outcome::NonHamiltonian, NonHamReason::NoSolution);

  // Pool-level obstructions. A private-edge overload on the raw pool is
  // recorded but not fatal: the pool is not yet a Hamilton-set candidate.
  {
    MultiplicityMap mm = edge_multiplicities(pool, g);
    if (auto v = find_overloaded_vertex(mm, g))
      event("overloaded_vertex_recorded", {{"vertex", *v}});
    if (has_irremovable_cluster(pool, g)) {
      event("irremovable_cluster", {});
      return verdict(Outcome::NonHamiltonian, NonHamReason::IrremovableCluster);
    }
    if (auto ck = find_locked_shared_cycle(pool, sols.solutions, g)) {
      event("locked_shared_cycle", {{"index", *ck}});
      return verdict(Outcome::NonHamiltonian, NonHamReason::LockedSharedCycle);
    }
  }

  for (std::size_t si = 0; si < sols.solutions.size(); ++si) {
    const GrinbergSolution& sol = sols.solutions[si];
    AttemptLog attempt;
    attempt.solution_index = si;
    attempt.solution = sol.solution;
    event("attempt", {{"solution_index", si}});

    std::vector<char> in_solution(pool.size(), 0);
    for (int i : sol.solution) in_solution[static_cast<std::size_t>(i)] = 1;

    std::vector<Cycle> active = pool;
    std::vector<int> ids(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) ids[i] = static_cast<int>(i);

    bool stuck = false;
    while (true) {
      std::vector<int> cos = sorted_complement_positions(ids, in_solution);
      if (cos.empty()) break;

      // Deletion conditions: removable, a complement member, and its removal
      // keeps every other remaining complement cycle removable.
      int chosen = -1;
      std::vector<int> removable_positions;
      for (int p : cos)
        if (is_removable_at(static_cast<std::size_t>(p), active, g).removable)
          removable_positions.push_back(p);
      for (int p : removable_positions) {
        bool cascade_ok = true;
        for (int q : cos) {
          if (q == p) continue;
          if (!is_removable_excluding(static_cast<std::size_t>(q), static_cast<std::size_t>(p),
                                      active, g)
                   .removable) {
            cascade_ok = false;
            break;
          }
        }
        if (cascade_ok) {
          chosen = p;
          break;
        }
      }
      if (chosen < 0) {
        stuck = true;
        event("stuck", {{"solution_index", si},
                        {"removable_candidates", removable_positions.size()},
                        {"complement_left", cos.size()}});
        break;
      }

      attempt.deleted.push_back(ids[static_cast<std::size_t>(chosen)]);
      event("delete", {{"cycle", ids[static_cast<std::size_t>(chosen)]},
                       {"complement_left", cos.size() - 1}});
      active.erase(active.begin() + chosen);
      ids.erase(ids.begin() + chosen);
    }

    attempt.remaining = ids;
    if (stuck) {
      attempt.outcome = "stuck";
      trace.attempts.push_back(std::move(attempt));
      continue;
    }

    // All complement cycles deleted: the GF(2) sum of the remaining set is
    // the Hamilton-cycle candidate.
    EdgeSet sum = xor_all(g, active);
    std::optional<Cycle> cand = try_cycle_from_edge_set(g, sum);
    bool ok = cand.has_value() && cand->order() == g.n() && verify_certificate(g, *cand);
    event("xor", {{"edges", sum.count()}, {"valid_hamilton_cycle", ok}});
    if (ok) {
      attempt.outcome = "hamiltonian";
      trace.attempts.push_back(std::move(attempt));
      return verdict(Outcome::Hamiltonian, NonHamReason::None, std::move(cand));
    }
    attempt.outcome = "unverified";
    trace.attempts.push_back(std::move(attempt));
    return verdict(Outcome::ClaimedHamiltonianUnverified, NonHamReason::None);
  }

  return verdict(Outcome::NonHamiltonian, NonHamReason::StuckDeletion);
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j{{"outcome", to_string(v.outcome)}, {"reason", to_string(v.reason)}};
  if (v.certificate) j["certificate"] = v.certificate->walk;
  return j;
}

nlohmann::json to_json(const TraceLog& t) {
  nlohmann::json attempts = nlohmann::json::array();
  for (const AttemptLog& a : t.attempts) {
    attempts.push_back({{"solution_index", a.solution_index},
                        {"solution", a.solution},
                        {"deleted", a.deleted},
                        {"remaining", a.remaining},
                        {"outcome", a.outcome}});
  }
  nlohmann::json events = nlohmann::json::array();
  for (const TraceEvent& e : t.events) events.push_back({{"kind", e.kind}, {"data", e.data}});
  return nlohmann::json{{"pool_id", t.pool_id},
                        {"pool", t.pool_walks},
                        {"solution_count", t.solution_count},
                        {"solutions_truncated", t.solutions_truncated},
                        {"attempts", attempts},
                        {"events", events}};
}

}  // namespace grin
