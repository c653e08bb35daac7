#include "grin/graph6.hpp"

#include <fstream>

namespace grin {

namespace {

constexpr int kLo = 63;
constexpr int kHi = 126;

int alphabet_byte(const std::string& line, std::size_t offset) {
  unsigned char c = static_cast<unsigned char>(line[offset]);
  if (c < kLo || c > kHi)
    fail(ErrorCode::MalformedGraph6,
         "byte " + std::to_string(static_cast<int>(c)) + " at offset " + std::to_string(offset) +
             " is outside the graph6 alphabet [63,126]");
  return c - kLo;
}

}  // namespace

Graph parse_graph6(const std::string& line) {
  if (line.empty()) fail(ErrorCode::MalformedGraph6, "empty record");

  std::size_t pos = 0;
  long long n = 0;
  if (static_cast<unsigned char>(line[0]) == 126) {
    if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
      fail(ErrorCode::MalformedGraph6, "8-byte size header (n > 258047) not supported, offset 1");
    if (line.size() < 4) fail(ErrorCode::MalformedGraph6, "truncated long size header");
    pos = 1;
    for (int k = 0; k < 3; ++k) n = (n << 6) | alphabet_byte(line, pos++);
    if (n < 63)
      fail(ErrorCode::MalformedGraph6, "long header used for n < 63 (non-canonical), offset 1");
  } else {
    n = alphabet_byte(line, pos++);
  }

  long long bits = n * (n - 1) / 2;
  std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos < body)
    fail(ErrorCode::MalformedGraph6, "record truncated: need " + std::to_string(body) +
                                         " body bytes, have " + std::to_string(line.size() - pos));
  if (line.size() - pos > body)
    fail(ErrorCode::MalformedGraph6, "trailing bytes after record at offset " +
                                         std::to_string(pos + body));

  std::vector<std::pair<int, int>> pairs;
  long long bit_index = 0;
  int value = 0, have = 0;
  std::size_t at = pos;
  // Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (have == 0) {
        value = alphabet_byte(line, at++);
        have = 6;
      }
      --have;
      if ((value >> have) & 1) pairs.emplace_back(row, col);
      ++bit_index;
    }
  }
  if (have > 0 && (value & ((1 << have) - 1)) != 0)
    fail(ErrorCode::MalformedGraph6, "nonzero padding bits at offset " + std::to_string(at - 1));

  return Graph::build(static_cast<int>(n), pairs);
}

std::string encode_graph6(const Graph& g) {
  long long n = g.n();
  if (n > 258047) fail(ErrorCode::NTooLarge, "graph6 encoding supports n <= 258047");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kLo));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kLo));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kLo));
    out.push_back(static_cast<char>((n & 63) + kLo));
  }

  std::vector<char> adj(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.v)] = 1;
    adj[static_cast<std::size_t>(e.v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.u)] = 1;
  }

  int value = 0, have = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      value = (value << 1) | adj[static_cast<std::size_t>(row) * static_cast<std::size_t>(n) + static_cast<std::size_t>(col)];
      if (++have == 6) {
        out.push_back(static_cast<char>(value + kLo));
        value = 0;
        have = 0;
      }
    }
  }
  if (have > 0) {
    value <<= (6 - have);
    out.push_back(static_cast<char>(value + kLo));
  }
  return out;
}

std::vector<Graph> load_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  std::vector<Graph> graphs;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first && line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    first = false;
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

}  // namespace grin
