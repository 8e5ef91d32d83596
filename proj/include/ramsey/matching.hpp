#pragma once

#include "ramsey/graph.hpp"

#include <cstdint>
#include <vector>

namespace ramsey {

// Size of a maximum matching (general graphs, exact).
int matching_number(const Graph& g);

// Same, restricted to the edges in `red` (isolated vertices are harmless).
int matching_number(const Graph& g, const EdgeSet& red);

// Maximum matching with a witness edge set.
Matching maximum_matching(const Graph& g);
Matching maximum_matching(const Graph& g, const EdgeSet& red);

namespace detail {
// Core solver over adjacency bitsets. Fills `mate` with the matched partner
// of each vertex (-1 if exposed) and returns the matching size.
int max_matching_adj(const std::vector<std::uint64_t>& adj, int n, std::vector<int>& mate);
} // namespace detail

} // namespace ramsey
