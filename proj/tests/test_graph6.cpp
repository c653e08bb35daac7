#include "doctest.h"

#include "grin/catalog.hpp"
#include "grin/generate.hpp"
#include "grin/graph6.hpp"
#include "support.hpp"

using namespace grin;

// Records produced by an established implementation, frozen as fixtures.
static const struct {
  const char* name;
  const char* record;
} kFixtures[] = {
    {"triangle", "Bw"},     {"k4", "C~"},           {"c5", "Dhc"},
    {"petersen", "IheA@GUAo"}, {"k1", "@"},         {"path4", "Ch"},
    {"herschel", "JsWIaGoH?F_"}, {"k5", "D~{"},     {"wheel5", "D|s"},
    {"fan6", "E|eG"},
};

TEST_CASE("C~ decodes to K4 and re-encodes identically") {
  Graph g = parse_graph6("C~");
  CHECK(g.n() == 4);
  CHECK(g.m() == 6);
  for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
  CHECK(testsup::independent_graph6(g) == "C~");
  CHECK(encode_graph6(g) == "C~");
}

TEST_CASE("fixture corpus round-trips bit-exactly") {
  for (const auto& fx : kFixtures) {
    Graph g = parse_graph6(fx.record);
    CHECK(encode_graph6(g) == fx.record);
    CHECK(testsup::independent_graph6(g) == fx.record);
  }
}

TEST_CASE("known graphs encode to their fixture records") {
  CHECK(encode_graph6(named_graph("k4")) == "C~");
  CHECK(encode_graph6(named_graph("k5")) == "D~{");
  CHECK(encode_graph6(named_graph("petersen")) == "IheA@GUAo");
  CHECK(encode_graph6(named_graph("herschel")) == "JsWIaGoH?F_");
  CHECK(encode_graph6(named_graph("wheel(5)")) == "D|s");
  CHECK(encode_graph6(named_graph("fan(6)")) == "E|eG");
  CHECK(encode_graph6(named_graph("cycle(5)")) == "Dhc");
}

TEST_CASE("triangle record is two characters; n=1 has no adjacency bytes") {
  CHECK(encode_graph6(Graph::build(3, {{0, 1}, {1, 2}, {2, 0}})).size() == 2);
  std::string k1 = encode_graph6(Graph::build(1, {}));
  CHECK(k1 == "@");
  CHECK(parse_graph6(k1).n() == 1);
}

TEST_CASE("out-of-alphabet byte is rejected with its offset") {
  auto code = testsup::error_code_of([] { parse_graph6("C\x20"); });
  CHECK(code == ErrorCode::MalformedGraph6);
  try {
    parse_graph6("C\x20");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("offset 1") != std::string::npos);
  }
}

TEST_CASE("malformed records") {
  CHECK(testsup::error_code_of([] { parse_graph6(""); }) == ErrorCode::MalformedGraph6);
  CHECK(testsup::error_code_of([] { parse_graph6("C"); }) == ErrorCode::MalformedGraph6);   // truncated
  CHECK(testsup::error_code_of([] { parse_graph6("C~~"); }) == ErrorCode::MalformedGraph6); // trailing
  CHECK(testsup::error_code_of([] { parse_graph6("B"); }) == ErrorCode::MalformedGraph6);
  // nonzero padding: triangle needs 3 bits, "Bw" = 111000; "Bz" = 111011
  CHECK(testsup::error_code_of([] { parse_graph6("Bz"); }) == ErrorCode::MalformedGraph6);
}

TEST_CASE("long size header round trip") {
  Graph c100 = named_graph("cycle(100)");
  std::string rec = encode_graph6(c100);
  CHECK(rec.size() == 4 + (100 * 99 / 2 + 5) / 6);
  CHECK(rec[0] == '~');
  Graph back = parse_graph6(rec);
  CHECK(back.n() == 100);
  CHECK(back.m() == 100);
  CHECK(encode_graph6(back) == rec);
  CHECK(testsup::independent_graph6(c100) == rec);
}

TEST_CASE("parse(encode(g)) reproduces g on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    int n = 1 + static_cast<int>(seed % 14);
    Graph g = generate_gnp(n, 0.4, seed * 97 + 1);
    Graph back = parse_graph6(encode_graph6(g));
    CHECK(back.n() == g.n());
    CHECK(back.m() == g.m());
    for (const Edge& e : g.edges()) CHECK(back.find_edge(e.u, e.v) >= 0);
  }
}
