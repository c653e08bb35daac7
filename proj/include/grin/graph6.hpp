#ifndef GRIN_GRAPH6_HPP
#define GRIN_GRAPH6_HPP

#include <string>
#include <vector>

#include "grin/graph.hpp"

namespace grin {

/// Parses one graph6 record (standard printable encoding, alphabet 63..126).
/// Rejects out-of-alphabet bytes, truncated records, trailing bytes and
/// nonzero padding bits; messages carry the byte offset.
Graph parse_graph6(const std::string& line);

/// Canonical graph6 record for g. Weights are dropped; sizes up to 258047
/// use the standard short or long header.
std::string encode_graph6(const Graph& g);

/// Reads one record per line; skips blank lines and a leading ">>graph6<<"
/// header if present.
std::vector<Graph> load_graph6_file(const std::string& path);

}  // namespace grin

#endif
