#pragma once

#include "ramsey/graph.hpp"

#include <functional>
#include <vector>

namespace ramsey {

enum class PruningProfile {
    none,
    // Structural necessary conditions for a minimal (nK2, C3) counterexample:
    // minimum degree >= 2, 2-connected, maximum degree <= 3. With
    // aggressive_n > 0 and edge_count <= 4*aggressive_n - 2, additionally
    // 3-regular with every edge in a triangle. An accelerator only: exact
    // headline results always cross-check against an unpruned run.
    c3_minimal_claims,
};

struct EnumerationSpec {
    int edge_count = 1;
    int min_vertices = 0; // 0 -> smallest nv with C(nv,2) >= edge_count
    int max_vertices = 0; // 0 -> edge_count + 1
    bool connected_only = true;
    PruningProfile profile = PruningProfile::none;
    int aggressive_n = 0; // enables the size-bounded extra conditions when > 0
    bool allow_large = false; // override the 13-edge guard
};

int default_min_vertices(int edge_count);
int default_max_vertices(int edge_count);

// No cut vertex and at least 3 vertices (K2 does not count).
bool is_two_connected(const Graph& g);

bool passes_pruning_profile(const Graph& g, const EnumerationSpec& spec);

// Builds catalogs of all graphs without isolated vertices, one canonical
// representative per isomorphism class, level by edge count. Level m is
// derived from level m-1 by the three edge augmentations (existing pair,
// pendant vertex, disjoint K2) with canonical-form deduplication; levels are
// sorted by canonical bytes, so iteration order is reproducible. A vertex
// cap prunes intermediates that no final graph within the cap can extend.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int vertex_cap);

    // All representatives with `edge_count` edges (not filtered).
    const std::vector<Graph>& level(int edge_count);

    int vertex_cap() const { return vertex_cap_; }

private:
    int vertex_cap_;
    std::vector<std::vector<Graph>> levels_; // levels_[m]: graphs with m edges
};

// One representative per isomorphism class matching the spec, in canonical
// order. Guarded at 13 edges unless allow_large.
std::vector<Graph> enumerate_graphs(const EnumerationSpec& spec);

// Streaming form over a shared enumerator (used by the search driver).
void enumerate_graphs(GraphEnumerator& enumerator, const EnumerationSpec& spec,
                      const std::function<void(const Graph&)>& yield);

} // namespace ramsey
