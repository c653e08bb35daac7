#include "grin/generate.hpp"

#include <random>

namespace grin {

Graph generate_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "gnp needs n >= 1");
  if (p < 0.0 || p > 1.0) fail(ErrorCode::InvalidArgument, "gnp needs p in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (r < p) pairs.emplace_back(u, v);
    }
  }
  return Graph::build(n, pairs);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> pairs;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) pairs.emplace_back(u, v);
  return Graph::build(n, pairs);
}

void enumerate_labeled_graphs(int n, bool connected_only,
                              const std::function<void(const Graph&, std::uint64_t)>& visit) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "enumeration needs n >= 1");
  if (n > 7) fail(ErrorCode::NTooLarge, "labeled enumeration is limited to n <= 7");
  int bits = n * (n - 1) / 2;
  std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = graph_from_mask(n, mask);
    if (connected_only && !is_connected(g)) continue;
    visit(g, mask);
  }
}

std::uint64_t count_labeled_graphs(int n, bool connected_only) {
  std::uint64_t count = 0;
  enumerate_labeled_graphs(n, connected_only, [&](const Graph&, std::uint64_t) { ++count; });
  return count;
}

}  // namespace grin
