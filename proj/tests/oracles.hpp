#pragma once

// Test-only brute-force oracles, kept independent of the library's
// algorithmic paths: subsets instead of blossoms, label permutations instead
// of refinement, vertex-map enumeration instead of bitset tricks.

#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ramsey::testing {

// Maximum matching size by include/exclude recursion over the edge list.
int brute_matching_number(const Graph& g);

// Subgraph containment by enumerating injective vertex maps.
bool brute_contains_target(const Graph& g, const TargetPattern& h);

// Isomorphism by trying all vertex permutations (intended for <= 8 vertices).
bool brute_is_isomorphic(const Graph& a, const Graph& b);

// All labeled graphs with exactly `edge_count` edges on exactly `nv`
// vertices, no isolated vertices.
std::vector<Graph> brute_labeled_graphs(int nv, int edge_count);

// One representative per isomorphism class with `edge_count` edges and
// vertex counts in [min_nv, max_nv], deduplicated pairwise by
// brute_is_isomorphic. Small inputs only.
std::vector<Graph> brute_graph_classes(int edge_count, int min_nv, int max_nv, bool connected_only);

// All inclusion-maximal h-free edge subsets, by filtering every subset.
std::vector<std::uint64_t> brute_maximal_target_free_masks(const Graph& g, const TargetPattern& h);

// Cut vertices by deletion and component counting.
std::vector<int> brute_cut_vertices(const Graph& g);

// Path-based descendant test: u is a descendant of v (relative to root) iff
// every u-root path passes through v, i.e. deleting v separates u from root.
bool brute_is_descendant(const Graph& g, int root, int v, int u);

// Deterministic random graph helpers.
Graph random_graph(std::mt19937& rng, int min_nv, int max_nv, int max_edges);
Graph random_connected_graph(std::mt19937& rng, int min_nv, int max_nv, int max_edges);
std::vector<int> random_permutation(std::mt19937& rng, int n);

} // namespace ramsey::testing
