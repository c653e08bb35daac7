#ifndef GRIN_GRAPH_HPP
#define GRIN_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "grin/errors.hpp"

namespace grin {

/// Undirected edge with endpoints normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

/// Simple undirected graph with dense 0-based vertex ids and stable edge ids.
/// Edge ids are assigned in construction order and never change; every edge
/// set downstream is a bit vector over this indexing. Immutable once built.
class Graph {
 public:
  struct Incidence {
    int to;
    int edge;
  };

  Graph() = default;

  /// Builds a graph from vertex pairs. Rejects self-loops, duplicate pairs
  /// (unordered), endpoints outside [0, n) and negative weights. When
  /// `weights` is empty every edge gets weight 1.
  static Graph build(int n, const std::vector<std::pair<int, int>>& pairs,
                     const std::vector<double>& weights = {});

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Incidence>& incident(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  /// Edge id joining u and v, or -1 when absent.
  int find_edge(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

/// True iff every vertex is reachable from vertex 0 (vacuously true for n=0).
bool is_connected(const Graph& g);

/// Parses the edge-list text format: first non-comment line "n m", then m
/// lines "u v [w]". '#' starts a comment anywhere on a line.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);
Graph load_edge_list_file(const std::string& path);

}  // namespace grin

#endif
