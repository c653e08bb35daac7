#include "grin/catalog.hpp"

#include <utility>

namespace grin {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Graph complete(int n) {
  Pairs pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return Graph::build(n, pairs);
}

Graph cycle(int n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "cycle(n) needs n >= 3");
  Pairs pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph::build(n, pairs);
}

Graph wheel(int n) {
  if (n < 4) fail(ErrorCode::InvalidArgument, "wheel(n) needs n >= 4");
  Pairs pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(i, i == n - 1 ? 1 : i + 1);
  for (int i = 1; i < n; ++i) pairs.emplace_back(0, i);
  return Graph::build(n, pairs);
}

Graph fan(int n) {
  if (n < 4) fail(ErrorCode::InvalidArgument, "fan(n) needs n >= 4");
  Pairs pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(n - 1, 0);
  for (int i = 2; i + 1 < n; ++i) pairs.emplace_back(0, i);
  return Graph::build(n, pairs);
}

Graph petersen() {
  Pairs pairs;
  for (int i = 0; i < 5; ++i) pairs.emplace_back(i, (i + 1) % 5);  // outer 5-cycle
  for (int i = 0; i < 5; ++i) pairs.emplace_back(i, i + 5);        // spokes
  for (int i = 0; i < 5; ++i) pairs.emplace_back(5 + i, 5 + (i + 2) % 5);  // pentagram
  return Graph::build(10, pairs);
}

// Smallest non-Hamiltonian polyhedral graph: 11 vertices, 18 edges,
// bipartite with parts of size 5 and 6.
Graph herschel() {
  Pairs pairs{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5},
              {2, 6}, {2, 7}, {3, 8}, {3, 9}, {4, 6}, {4, 8},
              {5, 7}, {5, 9}, {6, 10}, {7, 10}, {8, 10}, {9, 10}};
  return Graph::build(11, pairs);
}

// Tutte's cubic planar non-Hamiltonian graph: 46 vertices, 69 edges.
Graph tutte() {
  Pairs pairs{
      {0, 1},   {0, 2},   {0, 3},   {1, 4},   {1, 26},  {2, 10},  {2, 11},  {3, 18},
      {3, 19},  {4, 5},   {4, 33},  {5, 6},   {5, 29},  {6, 7},   {6, 27},  {7, 8},
      {7, 14},  {8, 9},   {8, 38},  {9, 10},  {9, 37},  {10, 39}, {11, 12}, {11, 39},
      {12, 13}, {12, 35}, {13, 14}, {13, 15}, {14, 34}, {15, 16}, {15, 22}, {16, 17},
      {16, 44}, {17, 18}, {17, 43}, {18, 45}, {19, 20}, {19, 45}, {20, 21}, {20, 41},
      {21, 22}, {21, 23}, {22, 40}, {23, 24}, {23, 27}, {24, 25}, {24, 32}, {25, 26},
      {25, 31}, {26, 33}, {27, 28}, {28, 29}, {28, 32}, {29, 30}, {30, 31}, {30, 33},
      {31, 32}, {34, 35}, {34, 38}, {35, 36}, {36, 37}, {36, 39}, {37, 38}, {40, 41},
      {40, 44}, {41, 42}, {42, 43}, {42, 45}, {43, 44}};
  return Graph::build(46, pairs);
}

// Parses "base(k)" forms; returns false when name has no parameter part.
bool parse_parametric(const std::string& name, std::string& base, int& k) {
  auto open = name.find('(');
  if (open == std::string::npos) return false;
  if (name.back() != ')') fail(ErrorCode::UnknownName, "malformed name '" + name + "'");
  base = name.substr(0, open);
  std::string arg = name.substr(open + 1, name.size() - open - 2);
  try {
    std::size_t pos = 0;
    k = std::stoi(arg, &pos);
    if (pos != arg.size()) throw std::invalid_argument(arg);
  } catch (const std::exception&) {
    fail(ErrorCode::UnknownName, "bad parameter in '" + name + "'");
  }
  return true;
}

}  // namespace

Graph named_graph(const std::string& name) {
  std::string base;
  int k = 0;
  if (parse_parametric(name, base, k)) {
    if (base == "cycle") return cycle(k);
    if (base == "wheel") return wheel(k);
    if (base == "fan") return fan(k);
    fail(ErrorCode::UnknownName, "'" + name + "' is not in the catalog");
  }
  if (name == "k4") return complete(4);
  if (name == "k5") return complete(5);
  if (name == "petersen") return petersen();
  if (name == "herschel") return herschel();
  if (name == "tutte") return tutte();
  fail(ErrorCode::UnknownName, "'" + name + "' is not in the catalog");
}

std::vector<std::string> catalog_names() {
  return {"k4", "k5", "cycle(n)", "wheel(n)", "fan(n)", "petersen", "herschel", "tutte"};
}

}  // namespace grin
