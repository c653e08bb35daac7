#include "grin/removal.hpp"

#include <algorithm>

namespace grin {

MultiplicityMap edge_multiplicities(const std::vector<Cycle>& working_set, const Graph& g) {
  MultiplicityMap mm;
  mm.count.assign(static_cast<std::size_t>(g.m()), 0);
  for (const Cycle& c : working_set) {
    if (c.edges.universe() != static_cast<std::size_t>(g.m()))
      fail(ErrorCode::DimensionMismatch, "cycle does not belong to this graph");
    c.edges.for_each([&](int e) { ++mm.count[static_cast<std::size_t>(e)]; });
  }
  return mm;
}

VertexClass classify_vertex(int v, const MultiplicityMap& mm, const Graph& g) {
  if (v < 0 || v >= g.n()) fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  int support = 0, privates = 0, shared2 = 0;
  for (const auto& inc : g.incident(v)) {
    int c = mm.count[static_cast<std::size_t>(inc.edge)];
    if (c == 0) continue;
    ++support;
    if (c == 1) ++privates;
    if (c == 2) ++shared2;
  }
  if (support == 0)
    fail(ErrorCode::IsolatedInSet, "vertex " + std::to_string(v) + " touches no working-set cycle");
  if (shared2 == support) return VertexClass::Interior;
  if (support == 2 && privates == 2) return VertexClass::Boundary;
  return VertexClass::Mixed;
}

ConstraintState ConstraintState::all_undecided(const Graph& g) {
  ConstraintState s;
  s.status.assign(static_cast<std::size_t>(g.m()), EdgeStatus::Undecided);
  return s;
}

namespace {

// Propagation workspace: per-vertex counters plus a union-find over the
// required-edge paths (components only grow during one propagate call).
struct Propagator {
  const Graph& g;
  ConstraintState& state;
  PropagationStats* stats;
  std::vector<int> req, avail;
  std::vector<int> dsu_parent, dsu_size;
  bool closed_full_cycle = false;
  std::optional<Contradiction> bad;

  Propagator(const Graph& g0, ConstraintState& s, PropagationStats* st)
      : g(g0), state(s), stats(st) {
    std::size_t n = static_cast<std::size_t>(g.n());
    req.assign(n, 0);
    avail.assign(n, 0);
    dsu_parent.resize(n);
    dsu_size.assign(n, 1);
    for (std::size_t i = 0; i < n; ++i) dsu_parent[i] = static_cast<int>(i);
    for (int v = 0; v < g.n(); ++v) avail[static_cast<std::size_t>(v)] = g.degree(v);
  }

  int find(int x) {
    while (dsu_parent[static_cast<std::size_t>(x)] != x) {
      dsu_parent[static_cast<std::size_t>(x)] =
          dsu_parent[static_cast<std::size_t>(dsu_parent[static_cast<std::size_t>(x)])];
      x = dsu_parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void contradict(int rule, int vertex, int edge, std::string detail) {
    if (!bad) bad = Contradiction{rule, vertex, edge, std::move(detail)};
  }

  // Registers an already-Required edge with the union-find, detecting
  // proper subcycles (rule 2) and accepting only the full-length closure.
  void link_required(int e) {
    int u = g.edge(e).u, v = g.edge(e).v;
    int ru = find(u), rv = find(v);
    if (ru == rv) {
      if (dsu_size[static_cast<std::size_t>(ru)] == g.n() && !closed_full_cycle) {
        closed_full_cycle = true;
      } else {
        contradict(2, -1, e, "required edges close a proper subcycle");
      }
      return;
    }
    dsu_parent[static_cast<std::size_t>(ru)] = rv;
    dsu_size[static_cast<std::size_t>(rv)] += dsu_size[static_cast<std::size_t>(ru)];
  }

  bool mark_required(int e, int rule) {
    if (state.status[static_cast<std::size_t>(e)] == EdgeStatus::Required) return false;
    if (state.status[static_cast<std::size_t>(e)] == EdgeStatus::Forbidden) {
      contradict(rule, -1, e, "a rule requires a forbidden edge");
      return false;
    }
    state.status[static_cast<std::size_t>(e)] = EdgeStatus::Required;
    if (stats && rule == 1) ++stats->rule1;
    ++req[static_cast<std::size_t>(g.edge(e).u)];
    ++req[static_cast<std::size_t>(g.edge(e).v)];
    link_required(e);
    return true;
  }

  bool mark_forbidden(int e, int rule) {
    if (state.status[static_cast<std::size_t>(e)] == EdgeStatus::Forbidden) return false;
    if (state.status[static_cast<std::size_t>(e)] == EdgeStatus::Required) {
      contradict(rule, -1, e, "a rule forbids a required edge");
      return false;
    }
    state.status[static_cast<std::size_t>(e)] = EdgeStatus::Forbidden;
    if (stats) {
      if (rule == 2) ++stats->rule2;
      if (rule == 3) ++stats->rule3;
    }
    --avail[static_cast<std::size_t>(g.edge(e).u)];
    --avail[static_cast<std::size_t>(g.edge(e).v)];
    return true;
  }

  std::optional<Contradiction> run() {
    // Absorb the seeded state.
    for (int e = 0; e < g.m(); ++e) {
      switch (state.status[static_cast<std::size_t>(e)]) {
        case EdgeStatus::Required:
          ++req[static_cast<std::size_t>(g.edge(e).u)];
          ++req[static_cast<std::size_t>(g.edge(e).v)];
          link_required(e);
          break;
        case EdgeStatus::Forbidden:
          --avail[static_cast<std::size_t>(g.edge(e).u)];
          --avail[static_cast<std::size_t>(g.edge(e).v)];
          break;
        case EdgeStatus::Undecided:
          break;
      }
      if (bad) return bad;
    }

    bool changed = true;
    while (changed && !bad) {
      changed = false;
      for (int v = 0; v < g.n() && !bad; ++v) {
        if (avail[static_cast<std::size_t>(v)] < 2) {
          contradict(1, v, -1, "vertex has fewer than two usable edges");
          break;
        }
        if (req[static_cast<std::size_t>(v)] > 2) {
          contradict(3, v, -1, "vertex has more than two required edges");
          break;
        }
        if (req[static_cast<std::size_t>(v)] == 2) {
          for (const auto& inc : g.incident(v)) {
            if (state.status[static_cast<std::size_t>(inc.edge)] == EdgeStatus::Undecided)
              changed |= mark_forbidden(inc.edge, 3);
            if (bad) break;
          }
        } else if (avail[static_cast<std::size_t>(v)] == 2) {
          for (const auto& inc : g.incident(v)) {
            if (state.status[static_cast<std::size_t>(inc.edge)] != EdgeStatus::Forbidden)
              changed |= mark_required(inc.edge, 1);
            if (bad) break;
          }
        }
      }
      for (int e = 0; e < g.m() && !bad; ++e) {
        if (state.status[static_cast<std::size_t>(e)] != EdgeStatus::Undecided) continue;
        int ru = find(g.edge(e).u), rv = find(g.edge(e).v);
        if (ru == rv && dsu_size[static_cast<std::size_t>(ru)] < g.n())
          changed |= mark_forbidden(e, 2);
      }
    }
    return bad;
  }
};

}  // namespace

std::optional<Contradiction> propagate_rules(const Graph& g, ConstraintState& state,
                                             PropagationStats* stats) {
  if (state.status.size() != static_cast<std::size_t>(g.m()))
    fail(ErrorCode::DimensionMismatch, "constraint state does not match the graph");
  Propagator p(g, state, stats);
  return p.run();
}

namespace {

// Shared core: removability of working_set[skip] evaluated on the rest,
// optionally with a second member treated as already removed.
RemovabilityReport removability(const std::vector<Cycle>& working_set, std::size_t skip,
                                const Graph& g,
                                std::size_t pre_removed = static_cast<std::size_t>(-1)) {
  RemovabilityReport report;

  std::vector<int> cover(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> mult(static_cast<std::size_t>(g.m()), 0);
  for (std::size_t i = 0; i < working_set.size(); ++i) {
    if (i == skip || i == pre_removed) continue;
    for (int v : working_set[i].walk) ++cover[static_cast<std::size_t>(v)];
    working_set[i].edges.for_each([&](int e) { ++mult[static_cast<std::size_t>(e)]; });
  }

  // (a) vertex coverage
  std::vector<int> uncovered;
  for (int v = 0; v < g.n(); ++v)
    if (cover[static_cast<std::size_t>(v)] == 0) uncovered.push_back(v);
  if (!uncovered.empty()) {
    report.reasons.push_back(RemovabilityReason{RemovabilityReason::Kind::CoverageLoss,
                                                std::move(uncovered), std::nullopt});
  }

  // (b) no vertex may end up with three or more private edges
  for (int v = 0; v < g.n(); ++v) {
    int privates = 0;
    for (const auto& inc : g.incident(v))
      if (mult[static_cast<std::size_t>(inc.edge)] == 1) ++privates;
    if (privates >= 3) {
      report.reasons.push_back(RemovabilityReason{RemovabilityReason::Kind::OverloadedVertex,
                                                  {v}, std::nullopt});
      break;
    }
  }

  // (c) rules consistency of the remaining set
  ConstraintState state;
  state.status.assign(static_cast<std::size_t>(g.m()), EdgeStatus::Undecided);
  for (int e = 0; e < g.m(); ++e) {
    if (mult[static_cast<std::size_t>(e)] == 1)
      state.status[static_cast<std::size_t>(e)] = EdgeStatus::Required;
    else if (mult[static_cast<std::size_t>(e)] == 0)
      state.status[static_cast<std::size_t>(e)] = EdgeStatus::Forbidden;
  }
  if (auto c = propagate_rules(g, state)) {
    report.reasons.push_back(
        RemovabilityReason{RemovabilityReason::Kind::RulesContradiction, {}, std::move(c)});
  }

  report.removable = report.reasons.empty();
  return report;
}

}  // namespace

RemovabilityReport is_removable_at(std::size_t index, const std::vector<Cycle>& working_set,
                                   const Graph& g) {
  if (index >= working_set.size())
    fail(ErrorCode::CycleNotInSet, "index " + std::to_string(index) + " out of range");
  return removability(working_set, index, g);
}

RemovabilityReport is_removable(const Cycle& c, const std::vector<Cycle>& working_set,
                                const Graph& g) {
  for (std::size_t i = 0; i < working_set.size(); ++i)
    if (working_set[i].edges == c.edges) return removability(working_set, i, g);
  fail(ErrorCode::CycleNotInSet, "cycle is not a member of the working set");
}

RemovabilityReport is_removable_excluding(std::size_t index, std::size_t pre_removed,
                                          const std::vector<Cycle>& working_set, const Graph& g) {
  if (index >= working_set.size() || pre_removed >= working_set.size())
    fail(ErrorCode::CycleNotInSet, "index out of range");
  return removability(working_set, index, g, pre_removed);
}

std::optional<int> find_overloaded_vertex(const MultiplicityMap& mm, const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    int privates = 0;
    for (const auto& inc : g.incident(v))
      if (mm.count[static_cast<std::size_t>(inc.edge)] == 1) ++privates;
    if (privates >= 3) return v;
  }
  return std::nullopt;
}

bool has_irremovable_cluster(const std::vector<Cycle>& working_set, const Graph& g) {
  if (working_set.size() < 3) return false;
  MultiplicityMap mm = edge_multiplicities(working_set, g);

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < working_set.size(); ++i) {
    bool has_private = false;
    working_set[i].edges.for_each([&](int e) {
      if (mm.count[static_cast<std::size_t>(e)] == 1) has_private = true;
    });
    if (!has_private) continue;
    if (!removability(working_set, i, g).removable) candidates.push_back(i);
  }
  if (candidates.size() < 3) return false;

  std::vector<std::vector<char>> masks;
  masks.reserve(candidates.size());
  for (std::size_t i : candidates) masks.push_back(vertex_mask(g, working_set[i]));
  auto touch = [&](std::size_t a, std::size_t b) {
    for (std::size_t v = 0; v < masks[a].size(); ++v)
      if (masks[a][v] && masks[b][v]) return true;
    return false;
  };
  for (std::size_t a = 0; a < candidates.size(); ++a)
    for (std::size_t b = a + 1; b < candidates.size(); ++b) {
      if (!touch(a, b)) continue;
      for (std::size_t c = b + 1; c < candidates.size(); ++c)
        if (touch(a, c) && touch(b, c)) return true;
    }
  return false;
}

std::optional<std::size_t> find_locked_shared_cycle(const std::vector<Cycle>& working_set,
                                                    const std::vector<GrinbergSolution>& solutions,
                                                    const Graph& g) {
  if (solutions.size() != 1) return std::nullopt;
  for (std::size_t i = 0; i < working_set.size(); ++i)
    if (removability(working_set, i, g).removable) return std::nullopt;

  MultiplicityMap mm = edge_multiplicities(working_set, g);
  for (int idx : solutions.front().complement) {
    bool all_shared = true;
    working_set[static_cast<std::size_t>(idx)].edges.for_each([&](int e) {
      if (mm.count[static_cast<std::size_t>(e)] < 2) all_shared = false;
    });
    if (all_shared) return static_cast<std::size_t>(idx);
  }
  return std::nullopt;
}

}  // namespace grin
