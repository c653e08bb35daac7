#include "grin/grinberg.hpp"

#include <algorithm>

namespace grin {

long long planar_criterion_sum(const FaceSpec& spec) {
  long long sum = 0;
  for (int d : spec.inside_degrees) {
    if (d < 3) fail(ErrorCode::DegreeTooSmall, "inside face of degree " + std::to_string(d));
    sum += d - 2;
  }
  for (int d : spec.outside_degrees) {
    if (d < 3) fail(ErrorCode::DegreeTooSmall, "outside face of degree " + std::to_string(d));
    sum -= d - 2;
  }
  return sum;
}

long long equation_residual(const std::vector<int>& cycle_orders, int n) {
  long long sum = 0;
  for (int o : cycle_orders) sum += o - 2;
  return sum - (n - 2);
}

SolutionSet enumerate_solutions(const std::vector<Cycle>& pool, int n, const SolutionConfig& cfg,
                                const std::string& pool_id) {
  if (cfg.max_solutions < 1) fail(ErrorCode::InvalidArgument, "max_solutions must be >= 1");
  SolutionSet out;
  long long target = static_cast<long long>(n) - 2;
  if (target < 1) return out;  // a Hamilton set is non-empty, so its sum is >= 1

  std::size_t k = pool.size();
  std::vector<long long> contrib(k), suffix(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) contrib[i] = pool[i].order() - 2;
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] + contrib[i];

  std::vector<int> chosen;
  // Depth-first by index: subsets appear in lexicographic order of their
  // ascending index sequences.
  auto rec = [&](auto&& self, std::size_t i, long long remaining) -> bool {
    if (remaining == 0) {
      GrinbergSolution s;
      s.pool_id = pool_id;
      s.solution = chosen;
      s.complement.reserve(k - chosen.size());
      std::size_t at = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (at < chosen.size() && chosen[at] == static_cast<int>(j))
          ++at;
        else
          s.complement.push_back(static_cast<int>(j));
      }
      out.solutions.push_back(std::move(s));
      if (out.solutions.size() == static_cast<std::size_t>(cfg.max_solutions)) {
        out.truncated = true;
        return false;
      }
      return true;
    }
    if (i >= k || suffix[i] < remaining) return true;
    // include pool[i]
    if (contrib[i] <= remaining) {
      chosen.push_back(static_cast<int>(i));
      bool keep = self(self, i + 1, remaining - contrib[i]);
      chosen.pop_back();
      if (!keep) return false;
    }
    // exclude pool[i]
    return self(self, i + 1, remaining);
  };
  rec(rec, 0, target);
  return out;
}

bool verify_hamilton_set_identity(const std::vector<Cycle>& cycles, int n) {
  if (cycles.empty()) return false;
  long long sum = 0;
  for (const Cycle& c : cycles) sum += c.order();
  return sum - 2 * (static_cast<long long>(cycles.size()) - 1) == n;
}

namespace {

std::vector<std::uint64_t> vertex_bits(const Graph& g, const Cycle& c) {
  std::vector<std::uint64_t> bits((static_cast<std::size_t>(g.n()) + 63) / 64, 0);
  for (int v : c.walk)
    bits[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (static_cast<std::size_t>(v) & 63);
  return bits;
}

long long popcount(const std::vector<std::uint64_t>& bits) {
  long long total = 0;
  for (std::uint64_t w : bits) total += __builtin_popcountll(w);
  return total;
}

}  // namespace

InclusionExclusionAudit inclusion_exclusion_audit(const Graph& g, const std::vector<Cycle>& cycles) {
  InclusionExclusionAudit audit;
  std::size_t k = cycles.size();
  audit.intersection_sums.assign(k, 0);
  if (k == 0) {
    audit.sharing_graph_is_tree = false;
    audit.hamilton_shape = false;
    return audit;
  }

  std::vector<std::vector<std::uint64_t>> vsets;
  vsets.reserve(k);
  for (const Cycle& c : cycles) vsets.push_back(vertex_bits(g, c));

  // Union and the exact inclusion-exclusion terms. Subsets are explored
  // depth-first with incremental intersections; an empty intersection prunes
  // all supersets.
  {
    std::vector<std::uint64_t> uni(vsets.front().size(), 0);
    for (const auto& vs : vsets)
      for (std::size_t w = 0; w < uni.size(); ++w) uni[w] |= vs[w];
    audit.union_size = popcount(uni);
  }
  auto rec = [&](auto&& self, std::size_t next, std::vector<std::uint64_t>& inter, int depth) -> void {
    for (std::size_t j = next; j < k; ++j) {
      std::vector<std::uint64_t> cur(inter.size());
      bool any = false;
      for (std::size_t w = 0; w < inter.size(); ++w) {
        cur[w] = inter[w] & vsets[j][w];
        any = any || cur[w];
      }
      if (!any) continue;
      audit.intersection_sums[static_cast<std::size_t>(depth)] += popcount(cur);
      self(self, j + 1, cur, depth + 1);
    }
  };
  for (std::size_t i = 0; i < k; ++i) {
    audit.intersection_sums[0] += popcount(vsets[i]);
    auto inter = vsets[i];
    rec(rec, i + 1, inter, 1);
  }

  // Edge-sharing structure.
  struct Dsu {
    std::vector<int> p;
    explicit Dsu(std::size_t n) : p(n) { for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i); }
    int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
    bool unite(int a, int b) {
      a = find(a); b = find(b);
      if (a == b) return false;
      p[static_cast<std::size_t>(a)] = b;
      return true;
    }
  } dsu(k);
  bool acyclic = true;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      std::size_t shared = 0;
      cycles[a].edges.for_each([&](int e) {
        if (cycles[b].edges.test(e)) ++shared;
      });
      if (shared == 0) continue;
      ++audit.jointed_pair_count;
      long long common_vertices = 0;
      for (std::size_t w = 0; w < vsets[a].size(); ++w)
        common_vertices += __builtin_popcountll(vsets[a][w] & vsets[b][w]);
      audit.jointed_pair_sum += common_vertices;
      if (shared != 1 || common_vertices != 2) audit.pairs_share_two_vertices_one_edge = false;
      if (!dsu.unite(static_cast<int>(a), static_cast<int>(b))) acyclic = false;
    }
  }
  int components = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (dsu.find(static_cast<int>(i)) == static_cast<int>(i)) ++components;
  audit.sharing_graph_is_tree = acyclic && components == 1;
  audit.hamilton_shape = audit.sharing_graph_is_tree && audit.pairs_share_two_vertices_one_edge;
  return audit;
}

nlohmann::json solution_to_json(const GrinbergSolution& s, const std::vector<Cycle>& pool, int n) {
  nlohmann::json side_a = nlohmann::json::array();
  for (int i : s.solution)
    side_a.push_back({{"index", i}, {"order", pool[static_cast<std::size_t>(i)].order()}});
  nlohmann::json side_b = nlohmann::json::array();
  for (int i : s.complement)
    side_b.push_back({{"index", i}, {"order", pool[static_cast<std::size_t>(i)].order()}});
  return nlohmann::json{{"pool", s.pool_id},
                        {"target", n - 2},
                        {"solution", side_a},
                        {"complement", side_b}};
}

}  // namespace grin
