#include "doctest.h"

#include <random>

#include "grin/catalog.hpp"
#include "grin/generate.hpp"
#include "grin/mcb.hpp"
#include "support.hpp"

using namespace grin;

TEST_CASE("K4 minimum cycle basis: three triangles, weight 9") {
  Graph k4 = named_graph("k4");
  CycleBasis mcb = horton_mcb(k4);
  REQUIRE(mcb.cycles.size() == 3);
  for (const Cycle& c : mcb.cycles) CHECK(c.order() == 3);
  CHECK(total_weight(mcb) == 9.0);
  CHECK(total_weight(mcb) == testsup::brute_mcb_weight(k4));
}

TEST_CASE("C5: the single cycle") {
  Graph c5 = named_graph("cycle(5)");
  CycleBasis mcb = horton_mcb(c5);
  REQUIRE(mcb.cycles.size() == 1);
  CHECK(total_weight(mcb) == 5.0);
}

TEST_CASE("Petersen: six 5-cycles, weight 30, matching brute force") {
  Graph petersen = named_graph("petersen");
  CycleBasis mcb = horton_mcb(petersen);
  REQUIRE(mcb.cycles.size() == 6);
  for (const Cycle& c : mcb.cycles) CHECK(c.order() == 5);
  CHECK(total_weight(mcb) == 30.0);
  CHECK(total_weight(mcb) == testsup::brute_mcb_weight(petersen));
}

TEST_CASE("basis size is m - n + 1 and never beats the brute-force minimum (n <= 6)") {
  for (int n = 2; n <= 6; ++n) {
    enumerate_labeled_graphs(n, true, [&](const Graph& g, std::uint64_t) {
      CycleBasis mcb = horton_mcb(g);
      CycleBasis fnd = fundamental_basis(g);
      long long dim = static_cast<long long>(g.m()) - g.n() + 1;
      CHECK(static_cast<long long>(mcb.cycles.size()) == dim);
      CHECK(static_cast<long long>(fnd.cycles.size()) == dim);
      CHECK(total_weight(mcb) <= total_weight(fnd));
      CHECK(is_cycle_basis(g, mcb.cycles));
    });
  }
}

TEST_CASE("basis sizes agree on sampled n = 7 graphs") {
  std::mt19937_64 rng(1234);
  int checked = 0;
  while (checked < 100) {
    Graph g = graph_from_mask(7, rng() & ((std::uint64_t{1} << 21) - 1));
    if (!is_connected(g)) continue;
    ++checked;
    long long dim = static_cast<long long>(g.m()) - g.n() + 1;
    CHECK(static_cast<long long>(horton_mcb(g).cycles.size()) == dim);
    CHECK(static_cast<long long>(fundamental_basis(g).cycles.size()) == dim);
  }
}

TEST_CASE("weighted graph where the fundamental basis is not minimum") {
  // Square with one heavy diagonal: fundamental cycles through the diagonal
  // are heavier than the two triangles.
  Graph g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}},
                         {1.0, 1.0, 1.0, 1.0, 10.0});
  CycleBasis mcb = horton_mcb(g);
  REQUIRE(mcb.cycles.size() == 2);
  CHECK(total_weight(mcb) == testsup::brute_mcb_weight(g));

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph h = generate_gnp(7, 0.6, seed);
    if (!is_connected(h)) continue;
    // weights 1..5 assigned deterministically by edge id
    std::vector<std::pair<int, int>> pairs;
    std::vector<double> ws;
    for (const Edge& e : h.edges()) {
      pairs.emplace_back(e.u, e.v);
      ws.push_back(1.0 + static_cast<double>(pairs.size() % 5));
    }
    Graph weighted = Graph::build(h.n(), pairs, ws);
    CHECK(total_weight(horton_mcb(weighted)) == testsup::brute_mcb_weight(weighted));
  }
}

TEST_CASE("deterministic output: repeated runs give identical bases") {
  Graph g = generate_gnp(12, 0.4, 5);
  if (!is_connected(g)) return;
  CycleBasis a = horton_mcb(g);
  CycleBasis b = horton_mcb(g);
  REQUIRE(a.cycles.size() == b.cycles.size());
  for (std::size_t i = 0; i < a.cycles.size(); ++i) {
    CHECK(a.cycles[i].edges == b.cycles[i].edges);
    CHECK(a.cycles[i].walk == b.cycles[i].walk);
  }
}

TEST_CASE("disconnected input is rejected") {
  Graph split = Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(testsup::error_code_of([&] { horton_mcb(split); }) == ErrorCode::DisconnectedGraph);
}
