#include "doctest.h"

#include <random>

#include "grin/catalog.hpp"
#include "grin/generate.hpp"
#include "grin/graph.hpp"
#include "support.hpp"

using namespace grin;

TEST_CASE("build_graph triangle") {
  Graph g = Graph::build(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(g.n() == 3);
  CHECK(g.m() == 3);
  for (int v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
  CHECK(g.edge(2).u == 0);  // endpoints normalized
  CHECK(g.edge(2).v == 2);
}

TEST_CASE("build_graph rejects bad input, naming the offender") {
  auto dup = testsup::error_code_of([] { Graph::build(4, {{0, 1}, {0, 1}}); });
  CHECK(dup == ErrorCode::DuplicateEdge);
  auto dup_swapped = testsup::error_code_of([] { Graph::build(4, {{0, 1}, {1, 0}}); });
  CHECK(dup_swapped == ErrorCode::DuplicateEdge);
  auto loop = testsup::error_code_of([] { Graph::build(4, {{2, 2}}); });
  CHECK(loop == ErrorCode::SelfLoop);
  auto range = testsup::error_code_of([] { Graph::build(4, {{0, 4}}); });
  CHECK(range == ErrorCode::VertexOutOfRange);
  auto negw = testsup::error_code_of([] { Graph::build(3, {{0, 1}}, {-2.0}); });
  CHECK(negw == ErrorCode::NegativeWeight);

  try {
    Graph::build(4, {{0, 1}, {0, 1}});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("pair #1") != std::string::npos);
  }
}

TEST_CASE("K5 by construction") {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) pairs.emplace_back(u, v);
  Graph g = Graph::build(5, pairs);
  CHECK(g.m() == 10);
  for (int v = 0; v < 5; ++v) CHECK(g.degree(v) == 4);
}

TEST_CASE("degree sum equals twice edge count") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = generate_gnp(9, 0.4, seed);
    long long sum = 0;
    for (int v = 0; v < g.n(); ++v) sum += g.degree(v);
    CHECK(sum == 2LL * g.m());
  }
}

TEST_CASE("adjacency and edge list describe the same edges") {
  Graph g = generate_gnp(10, 0.35, 7);
  // rebuild the edge multiset from adjacency and compare
  std::vector<std::pair<int, int>> rebuilt;
  for (int v = 0; v < g.n(); ++v)
    for (const auto& inc : g.incident(v))
      if (v < inc.to) rebuilt.emplace_back(v, inc.to);
  std::sort(rebuilt.begin(), rebuilt.end());
  std::vector<std::pair<int, int>> direct;
  for (const Edge& e : g.edges()) direct.emplace_back(e.u, e.v);
  std::sort(direct.begin(), direct.end());
  CHECK(rebuilt == direct);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(Graph::build(3, {{0, 1}, {1, 2}, {2, 0}})));
  CHECK_FALSE(is_connected(Graph::build(4, {{0, 1}, {2, 3}})));
  Graph petersen = named_graph("petersen");
  CHECK(is_connected(petersen));
  CHECK(testsup::bfs_reachable_count(petersen) == 10);
  CHECK(is_connected(Graph::build(0, {})));
  CHECK(is_connected(Graph::build(1, {})));
  CHECK_FALSE(is_connected(Graph::build(2, {})));
}

TEST_CASE("edge-list round trip with comments and weights") {
  std::string text =
      "# toy graph\n"
      "4 3\n"
      "0 1\n"
      "1 2 2.5  # weighted chord\n"
      "2 3\n";
  Graph g = parse_edge_list(text);
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  CHECK(g.edge(1).weight == 2.5);
  CHECK(g.edge(0).weight == 1.0);

  Graph again = parse_edge_list(write_edge_list(g));
  CHECK(again.m() == g.m());
  CHECK(again.edge(1).weight == 2.5);
}

TEST_CASE("edge-list rejects malformed input") {
  CHECK(testsup::error_code_of([] { parse_edge_list("nonsense\n"); }) ==
        ErrorCode::MalformedEdgeList);
  CHECK(testsup::error_code_of([] { parse_edge_list("2 2\n0 1\n"); }) ==
        ErrorCode::MalformedEdgeList);
  CHECK(testsup::error_code_of([] { parse_edge_list(""); }) == ErrorCode::MalformedEdgeList);
  CHECK(testsup::error_code_of([] { parse_edge_list("2 1\n0 x\n"); }) ==
        ErrorCode::MalformedEdgeList);
}
