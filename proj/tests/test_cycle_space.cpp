#include "doctest.h"

#include "grin/catalog.hpp"
#include "grin/cycle_basis.hpp"
#include "grin/cycle_enum.hpp"
#include "grin/generate.hpp"
#include "support.hpp"

using namespace grin;

namespace {

EdgeSet set_of(const Graph& g, std::initializer_list<int> ids) {
  EdgeSet s(static_cast<std::size_t>(g.m()));
  for (int e : ids) s.set(e);
  return s;
}

}  // namespace

TEST_CASE("edge-set xor algebra") {
  Graph g = named_graph("k4");
  EdgeSet a = set_of(g, {0, 1});
  EdgeSet b = set_of(g, {1, 2});
  CHECK((a ^ a).empty());                 // self-inverse
  CHECK((EdgeSet(6) ^ a) == a);           // identity element
  CHECK((a ^ b) == set_of(g, {0, 2}));    // definition
  CHECK(testsup::error_code_of([&] { a ^ EdgeSet(5); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("lexicographic edge-id order") {
  Graph g = named_graph("k5");
  CHECK(set_of(g, {0, 5}).lex_less(set_of(g, {1, 2})));
  CHECK(set_of(g, {0, 3}).lex_less(set_of(g, {0, 4})));
  CHECK_FALSE(set_of(g, {0, 4}).lex_less(set_of(g, {0, 4})));
}

TEST_CASE("gf2_rank of K4 triangles") {
  Graph k4 = named_graph("k4");
  std::vector<EdgeSet> tris;
  for (auto walk : {std::vector<int>{0, 1, 2}, {0, 1, 3}, {0, 2, 3}})
    tris.push_back(cycle_from_walk(k4, walk).edges);
  CHECK(gf2_rank(tris) == 3);

  // brute-force independence: no nonzero subset xors to zero
  for (int mask = 1; mask < 8; ++mask) {
    EdgeSet acc(static_cast<std::size_t>(k4.m()));
    for (int i = 0; i < 3; ++i)
      if ((mask >> i) & 1) acc ^= tris[static_cast<std::size_t>(i)];
    CHECK_FALSE(acc.empty());
  }

  CHECK(gf2_rank({tris[0], tris[0], tris[0]}) == 1);
  CHECK(gf2_rank({}) == 0);
}

TEST_CASE("cycle_from_edge_set validates shape") {
  Graph tri = named_graph("cycle(3)");
  Cycle c = cycle_from_edge_set(tri, set_of(tri, {0, 1, 2}));
  CHECK(c.order() == 3);
  CHECK(c.walk == std::vector<int>{0, 1, 2});

  Graph two = Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(testsup::error_code_of([&] { cycle_from_edge_set(two, set_of(two, {0, 1, 2, 3, 4, 5})); }) ==
        ErrorCode::DisconnectedCycle);

  Graph path = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(testsup::error_code_of([&] { cycle_from_edge_set(path, set_of(path, {0, 1, 2})); }) ==
        ErrorCode::NotTwoRegular);
  CHECK(testsup::error_code_of([&] { cycle_from_edge_set(path, EdgeSet(3)); }) ==
        ErrorCode::EmptyEdgeSet);
}

TEST_CASE("fundamental basis") {
  Graph c5 = named_graph("cycle(5)");
  CycleBasis b5 = fundamental_basis(c5);
  REQUIRE(b5.cycles.size() == 1);
  CHECK(b5.cycles[0].order() == 5);

  Graph k4 = named_graph("k4");
  CycleBasis bk4 = fundamental_basis(k4);
  CHECK(bk4.cycles.size() == 3);
  std::vector<EdgeSet> vecs;
  for (const Cycle& c : bk4.cycles) vecs.push_back(c.edges);
  CHECK(gf2_rank(vecs) == 3);

  Graph tree = Graph::build(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  CHECK(fundamental_basis(tree).cycles.empty());

  Graph split = Graph::build(4, {{0, 1}, {2, 3}});
  CHECK(testsup::error_code_of([&] { fundamental_basis(split); }) == ErrorCode::DisconnectedGraph);
}

TEST_CASE("is_cycle_basis counts and rank") {
  Graph k4 = named_graph("k4");
  CHECK(is_cycle_basis(k4, fundamental_basis(k4).cycles));

  std::vector<Cycle> four;
  for (auto walk : {std::vector<int>{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})
    four.push_back(cycle_from_walk(k4, walk));
  CHECK_FALSE(is_cycle_basis(k4, four));  // too many
  CHECK_FALSE(is_cycle_basis(k4, {four[0], four[1]}));  // too few
}

TEST_CASE("span_contains") {
  Graph k4 = named_graph("k4");
  CycleBasis basis = fundamental_basis(k4);
  for (const Cycle& c : basis.cycles) CHECK(span_contains(basis, c.edges));
  CHECK(span_contains(basis, EdgeSet(static_cast<std::size_t>(k4.m()))));  // zero vector

  Cycle ham = cycle_from_walk(k4, {0, 1, 2, 3});
  CHECK(span_contains(basis, ham.edges));
  CHECK(testsup::error_code_of([&] { span_contains(basis, EdgeSet(2)); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("every cycle lies in the span of any basis (exhaustive n <= 6)") {
  for (int n = 3; n <= 6; ++n) {
    enumerate_labeled_graphs(n, true, [&](const Graph& g, std::uint64_t) {
      CycleBasis basis = fundamental_basis(g);
      for (const Cycle& c : all_simple_cycles(g)) CHECK(span_contains(basis, c.edges));
    });
  }
}

TEST_CASE("cycle enumerators agree (n <= 5, exhaustive)") {
  for (int n = 3; n <= 5; ++n) {
    enumerate_labeled_graphs(n, true, [&](const Graph& g, std::uint64_t) {
      auto lib = all_simple_cycles(g);
      auto by_paths = testsup::enumerate_cycles_by_paths(g);
      auto by_subsets = testsup::enumerate_cycles_by_subsets(g);
      CHECK(lib.size() == by_paths.size());
      CHECK(lib.size() == by_subsets.size());
    });
  }
}
