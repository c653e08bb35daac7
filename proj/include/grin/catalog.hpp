#ifndef GRIN_CATALOG_HPP
#define GRIN_CATALOG_HPP

#include <string>
#include <vector>

#include "grin/graph.hpp"

namespace grin {

/// Catalog of standard graphs: k4, k5, petersen, herschel, tutte, and the
/// parametric families cycle(n), wheel(n), fan(n). wheel(n) is a hub joined
/// to an (n-1)-cycle; fan(n) is the n-gon triangulated from vertex 0 (equally,
/// a hub joined to a path). Throws UnknownName for anything else.
Graph named_graph(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace grin

#endif
