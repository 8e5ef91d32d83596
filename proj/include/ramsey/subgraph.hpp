#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

#include <cstdint>
#include <vector>

namespace ramsey {

// True iff g contains a subgraph (not induced) copy of h. P3, C3 and C4 use
// bitset fast paths; general paths and cycles fall back to depth-first path
// search.
bool contains_target(const Graph& g, const TargetPattern& h);

// Containment restricted to the edges in `blue`.
bool contains_target(const Graph& g, const EdgeSet& blue, const TargetPattern& h);

// Incremental h-freeness: given blue h-free and e not blue, true iff
// blue + e is still h-free. Precondition is assert-checked in debug builds.
bool blue_extension_ok(const Graph& g, const EdgeSet& blue, int e, const TargetPattern& h);

// Every inclusion-maximal h-free edge subset of g, each exactly once.
// Guarded at 30 edges.
std::vector<EdgeSet> maximal_target_free_sets(const Graph& g, const TargetPattern& h);

namespace detail {
// Core checks over adjacency bitsets (n vertices).
bool contains_path_adj(const std::vector<std::uint64_t>& adj, int n, int m);
bool contains_cycle_adj(const std::vector<std::uint64_t>& adj, int n, int k);
bool contains_target_adj(const std::vector<std::uint64_t>& adj, int n, const TargetPattern& h);
// h-freeness of blue_adj + edge (u,v), assuming blue_adj itself is h-free.
bool extension_ok_adj(const std::vector<std::uint64_t>& blue_adj, int n, int u, int v,
                      const TargetPattern& h);
} // namespace detail

} // namespace ramsey
