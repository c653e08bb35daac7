#include "grin/graph.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace grin {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& pairs,
                   const std::vector<double>& weights) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "vertex count must be non-negative");
  if (!weights.empty() && weights.size() != pairs.size())
    fail(ErrorCode::InvalidArgument, "weight list length does not match pair list length");

  Graph g;
  g.n_ = n;
  g.adj_.resize(static_cast<std::size_t>(n));
  g.edges_.reserve(pairs.size());

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    int u = pairs[i].first;
    int v = pairs[i].second;
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(ErrorCode::VertexOutOfRange,
           "pair #" + std::to_string(i) + " = {" + std::to_string(u) + "," + std::to_string(v) +
               "} outside [0," + std::to_string(n) + ")");
    if (u == v)
      fail(ErrorCode::SelfLoop, "pair #" + std::to_string(i) + " = {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    if (u > v) std::swap(u, v);
    if (g.find_edge(u, v) >= 0)
      fail(ErrorCode::DuplicateEdge, "pair #" + std::to_string(i) + " = {" + std::to_string(u) +
                                         "," + std::to_string(v) + "} repeats an earlier pair");
    double w = weights.empty() ? 1.0 : weights[i];
    if (w < 0.0)
      fail(ErrorCode::NegativeWeight, "pair #" + std::to_string(i) + " has weight " + std::to_string(w));
    int id = static_cast<int>(g.edges_.size());
    g.edges_.push_back(Edge{u, v, w});
    g.adj_[static_cast<std::size_t>(u)].push_back(Incidence{v, id});
    g.adj_[static_cast<std::size_t>(v)].push_back(Incidence{u, id});
  }
  return g;
}

int Graph::find_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  const auto& b = adj_[static_cast<std::size_t>(v)];
  const auto& shorter = a.size() <= b.size() ? a : b;
  int other = a.size() <= b.size() ? v : u;
  for (const auto& inc : shorter)
    if (inc.to == other) return inc.edge;
  return -1;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(v)) {
      if (!seen[static_cast<std::size_t>(inc.to)]) {
        seen[static_cast<std::size_t>(inc.to)] = 1;
        ++reached;
        stack.push_back(inc.to);
      }
    }
  }
  return reached == g.n();
}

namespace {

// Strips a '#' comment and returns the remaining tokens.
std::vector<std::string> tokens_of_line(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long long parse_int_token(const std::string& tok, int line_no) {
  try {
    std::size_t pos = 0;
    long long value = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    fail(ErrorCode::MalformedEdgeList,
         "line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
  }
}

double parse_weight_token(const std::string& tok, int line_no) {
  try {
    std::size_t pos = 0;
    double value = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    fail(ErrorCode::MalformedEdgeList,
         "line " + std::to_string(line_no) + ": expected weight, got '" + tok + "'");
  }
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> pairs;
  std::vector<double> weights;
  bool any_weight = false;

  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokens_of_line(line);
    if (toks.empty()) continue;
    if (n < 0) {
      if (toks.size() != 2)
        fail(ErrorCode::MalformedEdgeList,
             "line " + std::to_string(line_no) + ": header must be 'n m'");
      n = parse_int_token(toks[0], line_no);
      m = parse_int_token(toks[1], line_no);
      if (n < 0 || m < 0)
        fail(ErrorCode::MalformedEdgeList, "line " + std::to_string(line_no) + ": negative n or m");
      continue;
    }
    if (toks.size() != 2 && toks.size() != 3)
      fail(ErrorCode::MalformedEdgeList,
           "line " + std::to_string(line_no) + ": expected 'u v [w]'");
    int u = static_cast<int>(parse_int_token(toks[0], line_no));
    int v = static_cast<int>(parse_int_token(toks[1], line_no));
    pairs.emplace_back(u, v);
    if (toks.size() == 3) {
      any_weight = true;
      weights.resize(pairs.size() - 1, 1.0);
      weights.push_back(parse_weight_token(toks[2], line_no));
    } else if (any_weight) {
      weights.push_back(1.0);
    }
  }
  if (n < 0) fail(ErrorCode::MalformedEdgeList, "missing 'n m' header");
  if (static_cast<long long>(pairs.size()) != m)
    fail(ErrorCode::MalformedEdgeList, "header announced " + std::to_string(m) + " edges, found " +
                                           std::to_string(pairs.size()));
  return Graph::build(static_cast<int>(n), pairs, any_weight ? weights : std::vector<double>{});
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.weight != 1.0) out << ' ' << e.weight;
    out << '\n';
  }
  return out.str();
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

}  // namespace grin
