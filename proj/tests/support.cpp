#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace testsup {

std::optional<std::vector<int>> naive_hamilton_walk(const grin::Graph& g) {
  int n = g.n();
  if (n < 3) return std::nullopt;
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  do {
    bool ok = g.find_edge(0, rest.front()) >= 0 && g.find_edge(rest.back(), 0) >= 0;
    for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
      ok = g.find_edge(rest[i], rest[i + 1]) >= 0;
    if (ok) {
      std::vector<int> walk{0};
      walk.insert(walk.end(), rest.begin(), rest.end());
      return walk;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::nullopt;
}

namespace {

void path_search(const grin::Graph& g, int root, std::vector<int>& path,
                 std::vector<int>& path_edges, std::vector<char>& used,
                 std::vector<std::vector<int>>& out) {
  int at = path.back();
  for (const auto& inc : g.incident(at)) {
    if (inc.to == root && path.size() >= 3) {
      if (path[1] < path.back()) {
        std::vector<int> cyc = path_edges;
        cyc.push_back(inc.edge);
        std::sort(cyc.begin(), cyc.end());
        out.push_back(std::move(cyc));
      }
      continue;
    }
    if (inc.to <= root || used[static_cast<std::size_t>(inc.to)]) continue;
    used[static_cast<std::size_t>(inc.to)] = 1;
    path.push_back(inc.to);
    path_edges.push_back(inc.edge);
    path_search(g, root, path, path_edges, used, out);
    path.pop_back();
    path_edges.pop_back();
    used[static_cast<std::size_t>(inc.to)] = 0;
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_cycles_by_paths(const grin::Graph& g) {
  std::vector<std::vector<int>> out;
  for (int root = 0; root < g.n(); ++root) {
    std::vector<int> path{root}, path_edges;
    std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
    used[static_cast<std::size_t>(root)] = 1;
    path_search(g, root, path, path_edges, used, out);
  }
  return out;
}

std::vector<std::vector<int>> enumerate_cycles_by_subsets(const grin::Graph& g) {
  std::vector<std::vector<int>> out;
  int m = g.m();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> ids;
    for (int e = 0; e < m; ++e) {
      if (!((mask >> e) & 1)) continue;
      ids.push_back(e);
      ++deg[static_cast<std::size_t>(g.edge(e).u)];
      ++deg[static_cast<std::size_t>(g.edge(e).v)];
    }
    bool two_regular = true;
    for (int v = 0; v < g.n(); ++v)
      if (deg[static_cast<std::size_t>(v)] != 0 && deg[static_cast<std::size_t>(v)] != 2)
        two_regular = false;
    if (!two_regular) continue;
    // connectivity over supported vertices
    int start = -1;
    for (int v = 0; v < g.n() && start < 0; ++v)
      if (deg[static_cast<std::size_t>(v)] == 2) start = v;
    if (start < 0) continue;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int visited = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (!((mask >> inc.edge) & 1)) continue;
        if (!seen[static_cast<std::size_t>(inc.to)]) {
          seen[static_cast<std::size_t>(inc.to)] = 1;
          ++visited;
          stack.push_back(inc.to);
        }
      }
    }
    int supported = 0;
    for (int v = 0; v < g.n(); ++v)
      if (deg[static_cast<std::size_t>(v)] == 2) ++supported;
    if (visited == supported) out.push_back(std::move(ids));
  }
  return out;
}

namespace {

struct BitRow {
  std::vector<std::uint64_t> words;

  explicit BitRow(int m) : words((static_cast<std::size_t>(m) + 63) / 64, 0) {}
  void set(int i) { words[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  bool get(int i) const {
    return (words[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
  }
  void xor_with(const BitRow& o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] ^= o.words[i];
  }
  bool zero() const {
    for (auto w : words)
      if (w) return false;
    return true;
  }
  int low() const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i]) return static_cast<int>(i * 64) + __builtin_ctzll(words[i]);
    return -1;
  }
};

}  // namespace

double brute_mcb_weight(const grin::Graph& g) {
  struct Cand {
    std::vector<int> ids;
    double weight;
  };
  std::vector<Cand> cands;
  for (auto& ids : enumerate_cycles_by_paths(g)) {
    double w = 0;
    for (int e : ids) w += g.edge(e).weight;
    cands.push_back(Cand{std::move(ids), w});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.ids.size() != b.ids.size()) return a.ids.size() < b.ids.size();
    return a.ids < b.ids;  // ids are sorted ascending: lexicographic
  });

  long long want = static_cast<long long>(g.m()) - g.n() + 1;
  if (want <= 0) return 0.0;

  std::vector<BitRow> rows;
  std::vector<int> pivots;
  double total = 0.0;
  long long taken = 0;
  for (const Cand& c : cands) {
    BitRow row(g.m());
    for (int e : c.ids) row.set(e);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (row.get(pivots[i])) row.xor_with(rows[i]);
    if (row.zero()) continue;
    pivots.push_back(row.low());
    rows.push_back(std::move(row));
    total += c.weight;
    if (++taken == want) return total;
  }
  grin::fail(grin::ErrorCode::Internal, "cycle enumeration did not span the cycle space");
}

std::string independent_graph6(const grin::Graph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  std::vector<int> bits;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) bits.push_back(g.find_edge(row, col) >= 0 ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v * 2 + bits[i + static_cast<std::size_t>(b)];
    out.push_back(static_cast<char>(63 + v));
  }
  return out;
}

int bfs_reachable_count(const grin::Graph& g) {
  if (g.n() == 0) return 0;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& inc : g.incident(queue[head]))
      if (!seen[static_cast<std::size_t>(inc.to)]) {
        seen[static_cast<std::size_t>(inc.to)] = 1;
        queue.push_back(inc.to);
      }
  }
  return static_cast<int>(queue.size());
}

namespace {

// Splits the sub-polygon given by this vertex list with a random chord,
// recursing on both halves; emits face vertex lists.
void subdivide(const std::vector<int>& poly, std::mt19937_64& rng,
               std::vector<std::pair<int, int>>& chords, std::vector<std::vector<int>>& faces) {
  std::size_t k = poly.size();
  if (k < 4 || (rng() & 1) == 0) {
    faces.push_back(poly);
    return;
  }
  // chord between positions i < j, non-adjacent around this sub-polygon
  std::size_t i = rng() % (k - 2);
  std::size_t j = i + 2 + rng() % (k - i - 2);
  if (i == 0 && j == k - 1) {
    faces.push_back(poly);
    return;
  }
  chords.emplace_back(poly[i], poly[j]);
  std::vector<int> left(poly.begin() + static_cast<long>(i), poly.begin() + static_cast<long>(j) + 1);
  std::vector<int> right(poly.begin() + static_cast<long>(j), poly.end());
  right.insert(right.end(), poly.begin(), poly.begin() + static_cast<long>(i) + 1);
  subdivide(left, rng, chords, faces);
  subdivide(right, rng, chords, faces);
}

}  // namespace

SubdividedPolygon random_subdivided_polygon(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);

  std::vector<int> poly(static_cast<std::size_t>(n));
  std::iota(poly.begin(), poly.end(), 0);
  std::vector<std::pair<int, int>> chords;
  std::vector<std::vector<int>> faces;
  subdivide(poly, rng, chords, faces);
  edges.insert(edges.end(), chords.begin(), chords.end());

  SubdividedPolygon out{grin::Graph::build(n, edges), {}};
  for (const auto& walk : faces) out.faces.push_back(grin::cycle_from_walk(out.graph, walk));
  return out;
}

std::vector<grin::Cycle> fan_triangles(const grin::Graph& fan, int n) {
  std::vector<grin::Cycle> tris;
  for (int i = 1; i + 1 < n; ++i) tris.push_back(grin::cycle_from_walk(fan, {0, i, i + 1}));
  return tris;
}

}  // namespace testsup
