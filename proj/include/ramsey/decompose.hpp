#pragma once

#include "ramsey/arrowing.hpp"
#include "ramsey/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey {

// One biconnected component: its edges, its vertices, and the cut vertices
// it contains. A block is K2 or 2-connected; blocks partition the edge set.
struct BlockInfo {
    EdgeSet edges;
    std::uint64_t vertices = 0;
    std::vector<int> cut_vertices; // ascending
    bool is_end_block = false;     // contains exactly one cut vertex
    bool is_k2 = false;
    bool is_cycle = false; // chordless cycle on >= 3 vertices
};

struct BlockDecomposition {
    std::vector<BlockInfo> blocks;
    std::uint64_t cut_vertices = 0;               // bitmask
    std::vector<std::vector<int>> blocks_at_cut;  // per vertex: block ids (empty if not cut)
};

// Standard biconnected-component decomposition. Requires g connected.
BlockDecomposition block_decompose(const Graph& g);

// Witness partition of a deletable edge set: E2 a star (possibly empty),
// E3 a matching (possibly empty), no outside edge adjacent to E3, and all
// remaining edges in one connected component.
struct DeletablePartition {
    EdgeSet star;     // E2
    EdgeSet matching; // E3
};

std::optional<DeletablePartition> is_deletable_edge_set(const Graph& g, const EdgeSet& e1);

// Profile of an end-cut vertex v: its parent-block attachment, its K2 and
// cycle child blocks, and the x/y bookkeeping of the induced colouring.
// Cycle paths store traversal order so the colouring is reproducible.
struct EndCutProfile {
    int v = -1;
    int root = -1;
    int parent_block = -1; // block id; -1 when v is the root
    int t1 = 0;            // neighbours of v in its parent block
    int t2 = 0;            // K2 child blocks
    int t = 0;             // cycle child blocks
    std::vector<int> path_lengths;                // p_i = cycle length - 2
    std::vector<std::vector<int>> cycle_paths;    // opened cycle, v excluded, in walk order
    std::vector<int> parent_edges;                // edge indices at v into the parent block
    std::vector<int> k2_edges;                    // edge indices of K2 child blocks
    std::vector<int> cycle_end_edges;             // 2t edges joining v to its cycle paths
    int x = 0; // t1 + t2 + 2t + sum p_i
    int y = 0; // 1 + sum floor((p_i + 1) / 3)
};

// End-cuts of g relative to `root`: cut vertices none of whose descendants
// (vertices all of whose paths to root pass through them) is a cut vertex.
// Requires g connected, not 2-connected, and root a cut vertex. Profiles are
// produced for end-cuts whose child blocks are all K2s or cycles, which is
// the only shape the colouring machinery applies to.
std::vector<EndCutProfile> find_end_cuts(const Graph& g, int root);

// A partially coloured edge set; edges outside red | blue are uncoloured.
struct PartialColouring {
    EdgeSet red;
    EdgeSet blue;
};

// Walks the cycle from edge 0, colouring red, red, blue repeatedly. The
// result has no blue P3 for any cycle length; n is the matching bound the
// caller is testing against and does not alter the pattern.
EdgeColouring cycle_colouring(const Graph& g, int n);

// Colours the x edges described by the profile: every edge at v red, each
// opened cycle path blue-red-red from the lower end. The coloured subgraph
// has no blue P3 and its maximum red matching has exactly y edges.
PartialColouring end_cut_colouring(const Graph& g, const EndCutProfile& profile);

} // namespace ramsey
