#pragma once

#include "ramsey/graph.hpp"

#include <string>

namespace ramsey {

// Canonical byte string: two graphs map to equal strings iff they are
// isomorphic. Layout: [total vertex count][component count] then, per
// component in sorted order, [component order][packed upper-triangle bits,
// column-major]. Computed by equitable-partition refinement plus
// individualize-and-refine backtracking over the remaining cells, taking the
// lexicographically minimal adjacency encoding over explored labelings.
std::string canonical_form(const Graph& g);

// The relabeled copy of g realizing canonical_form(g); components laid out
// in sorted order with consecutive vertex ranges.
Graph canonical_graph(const Graph& g);

// Rebuild a Graph from a canonical byte string.
Graph graph_from_canonical(const std::string& bytes);

} // namespace ramsey
