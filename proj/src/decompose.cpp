#include "ramsey/decompose.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace ramsey {
namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct BlockFinder {
    const Graph& g;
    int n;
    std::vector<int> disc, low;
    std::vector<int> edge_stack;
    int timer = 0;
    BlockDecomposition out;

    explicit BlockFinder(const Graph& g_)
        : g(g_), n(g_.vertex_count()), disc(n, 0), low(n, 0) {
        out.blocks_at_cut.resize(n);
    }

    void pop_block(int until_edge) {
        BlockInfo block;
        block.edges = EdgeSet(g.edge_count());
        for (;;) {
            int ei = edge_stack.back();
            edge_stack.pop_back();
            block.edges.set(ei);
            block.vertices |= bit(g.edge(ei).u) | bit(g.edge(ei).v);
            if (ei == until_edge) break;
        }
        out.blocks.push_back(std::move(block));
    }

    void dfs(int u, int parent_edge) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        std::uint64_t nb = g.neighbours(u);
        while (nb != 0) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            int ei = g.edge_index(u, w);
            if (ei == parent_edge) continue;
            if (disc[w] == 0) {
                ++children;
                edge_stack.push_back(ei);
                dfs(w, ei);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    if (parent_edge != -1 || children > 1) out.cut_vertices |= bit(u);
                    pop_block(ei);
                }
            } else if (disc[w] < disc[u]) {
                edge_stack.push_back(ei);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    }
};

} // namespace

BlockDecomposition block_decompose(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("block_decompose: graph is not connected");
    BlockFinder finder(g);
    finder.dfs(0, -1);
    assert(finder.edge_stack.empty());
    BlockDecomposition& out = finder.out;

    for (std::size_t b = 0; b < out.blocks.size(); ++b) {
        BlockInfo& block = out.blocks[b];
        std::uint64_t cuts = block.vertices & out.cut_vertices;
        while (cuts != 0) {
            int v = std::countr_zero(cuts);
            cuts &= cuts - 1;
            block.cut_vertices.push_back(v);
            out.blocks_at_cut[v].push_back(static_cast<int>(b));
        }
        block.is_end_block = block.cut_vertices.size() == 1;
        int bv = std::popcount(block.vertices);
        int be = block.edges.count();
        block.is_k2 = (be == 1);
        if (bv >= 3 && be == bv) {
            bool two_regular = true;
            auto adj = masked_adjacency(g, block.edges);
            std::uint64_t vs = block.vertices;
            while (vs != 0) {
                int v = std::countr_zero(vs);
                vs &= vs - 1;
                if (std::popcount(adj[v]) != 2) {
                    two_regular = false;
                    break;
                }
            }
            block.is_cycle = two_regular;
        }
    }
    return out;
}

std::optional<DeletablePartition> is_deletable_edge_set(const Graph& g, const EdgeSet& e1) {
    if (e1.capacity() != g.edge_count())
        throw std::invalid_argument("is_deletable_edge_set: subset sized for a different host");
    assert(is_connected(g));

    // Remaining edges must all lie in one connected component.
    EdgeSet rest = e1.complement();
    Graph remainder = edge_subgraph(g, rest);
    int edge_components = 0;
    for (auto comp : components(remainder))
        if (std::popcount(comp) >= 2) ++edge_components;
    if (edge_components > 1) return std::nullopt;

    auto try_center = [&](int c) -> std::optional<DeletablePartition> {
        DeletablePartition part{EdgeSet(g.edge_count()), EdgeSet(g.edge_count())};
        std::uint64_t matched = 0; // endpoints of E3
        bool ok = true;
        e1.for_each([&](int ei) {
            if (!ok) return;
            const Edge& e = g.edge(ei);
            if (c >= 0 && (e.u == c || e.v == c)) {
                part.star.set(ei);
            } else {
                if ((matched & (bit(e.u) | bit(e.v))) != 0) {
                    ok = false; // E3 must stay a matching
                    return;
                }
                matched |= bit(e.u) | bit(e.v);
                part.matching.set(ei);
            }
        });
        if (!ok) return std::nullopt;
        // No remaining edge may touch an E3 endpoint.
        bool clash = false;
        rest.for_each([&](int ei) {
            const Edge& e = g.edge(ei);
            if ((matched & (bit(e.u) | bit(e.v))) != 0) clash = true;
        });
        if (clash) return std::nullopt;
        return part;
    };

    for (int c = -1; c < g.vertex_count(); ++c)
        if (auto part = try_center(c)) return part;
    return std::nullopt;
}

namespace {

// Rooted block-cut tree bookkeeping shared by the end-cut computation.
struct RootedBlocks {
    const BlockDecomposition& dec;
    int root;
    std::vector<int> parent_block_of_cut; // per cut vertex, -1 for root
    std::vector<std::vector<int>> child_blocks_of_cut;
    std::vector<std::uint64_t> subtree_vertices; // per cut vertex (excluding the cut itself)

    RootedBlocks(const Graph& g, const BlockDecomposition& d, int r) : dec(d), root(r) {
        int n = g.vertex_count();
        parent_block_of_cut.assign(n, -1);
        child_blocks_of_cut.assign(n, {});
        subtree_vertices.assign(n, 0);

        // BFS over the block-cut tree from the root cut vertex.
        std::vector<char> block_seen(dec.blocks.size(), false);
        std::vector<char> cut_seen(n, false);
        std::vector<int> order; // cut vertices in BFS order
        cut_seen[root] = true;
        order.push_back(root);
        std::vector<std::pair<int, int>> block_parent; // (block, parent cut) in BFS order
        for (std::size_t head = 0; head < order.size(); ++head) {
            int v = order[head];
            for (int b : dec.blocks_at_cut[v]) {
                if (block_seen[b]) continue; // v's parent block
                block_seen[b] = true;
                child_blocks_of_cut[v].push_back(b);
                block_parent.emplace_back(b, v);
                for (int w : dec.blocks[b].cut_vertices) {
                    if (cut_seen[w]) continue;
                    cut_seen[w] = true;
                    parent_block_of_cut[w] = b;
                    order.push_back(w);
                }
            }
        }

        // Subtree vertex sets, children before parents.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int v = *it;
            std::uint64_t sub = 0;
            for (int b : child_blocks_of_cut[v]) {
                sub |= dec.blocks[b].vertices;
                for (int w : dec.blocks[b].cut_vertices)
                    if (w != v) sub |= subtree_vertices[w];
            }
            subtree_vertices[v] = sub & ~bit(v);
        }
    }
};

// The opened cycle path of a cycle block at v, walked from v's
// lower-numbered block-neighbour to the other.
std::vector<int> open_cycle_at(const Graph& g, const BlockInfo& block, int v) {
    auto adj = masked_adjacency(g, block.edges);
    std::uint64_t nb = adj[v];
    assert(std::popcount(nb) == 2);
    int start = std::countr_zero(nb);
    std::vector<int> path{start};
    int prev = v, cur = start;
    for (;;) {
        std::uint64_t next_mask = adj[cur] & ~bit(prev);
        assert(std::popcount(next_mask) == 1);
        int next = std::countr_zero(next_mask);
        if (next == v) break;
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    return path;
}

} // namespace

std::vector<EndCutProfile> find_end_cuts(const Graph& g, int root) {
    BlockDecomposition dec = block_decompose(g);
    if (dec.cut_vertices == 0)
        throw std::invalid_argument("find_end_cuts: graph is 2-connected (no cut vertices)");
    if ((dec.cut_vertices & bit(root)) == 0)
        throw std::invalid_argument("find_end_cuts: root is not a cut vertex");

    RootedBlocks tree(g, dec, root);
    std::vector<EndCutProfile> profiles;

    std::uint64_t cuts = dec.cut_vertices;
    while (cuts != 0) {
        int v = std::countr_zero(cuts);
        cuts &= cuts - 1;
        if ((tree.subtree_vertices[v] & dec.cut_vertices) != 0) continue; // descendant cut vertex

        bool conforming = true;
        for (int b : tree.child_blocks_of_cut[v])
            if (!dec.blocks[b].is_k2 && !dec.blocks[b].is_cycle) conforming = false;
        if (!conforming) continue;

        EndCutProfile p;
        p.v = v;
        p.root = root;
        p.parent_block = tree.parent_block_of_cut[v];
        if (p.parent_block >= 0) {
            const BlockInfo& pb = dec.blocks[p.parent_block];
            std::uint64_t nb = g.neighbours(v) & pb.vertices;
            while (nb != 0) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                int ei = g.edge_index(v, w);
                if (pb.edges.test(ei)) p.parent_edges.push_back(ei);
            }
            p.t1 = static_cast<int>(p.parent_edges.size());
        }
        for (int b : tree.child_blocks_of_cut[v]) {
            const BlockInfo& cb = dec.blocks[b];
            if (cb.is_k2) {
                ++p.t2;
                p.k2_edges.push_back(cb.edges.indices()[0]);
            } else {
                ++p.t;
                auto path = open_cycle_at(g, cb, v);
                p.path_lengths.push_back(static_cast<int>(path.size()) - 1);
                p.cycle_end_edges.push_back(g.edge_index(v, path.front()));
                p.cycle_end_edges.push_back(g.edge_index(v, path.back()));
                p.cycle_paths.push_back(std::move(path));
            }
        }
        p.x = p.t1 + p.t2 + 2 * p.t;
        p.y = 1;
        for (int pi : p.path_lengths) {
            p.x += pi;
            p.y += (pi + 1) / 3;
        }
        profiles.push_back(std::move(p));
    }
    return profiles;
}

EdgeColouring cycle_colouring(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("cycle_colouring: n must be positive");
    bool cycle_shape = g.vertex_count() >= 3 && g.edge_count() == g.vertex_count();
    for (int v = 0; cycle_shape && v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) cycle_shape = false;
    if (!cycle_shape || !is_connected(g))
        throw std::invalid_argument("cycle_colouring: graph is not a cycle");

    EdgeSet blue(g.edge_count());
    int prev = g.edge(0).u;
    int cur = g.edge(0).v;
    for (int pos = 1; pos < g.edge_count(); ++pos) {
        std::uint64_t next_mask = g.neighbours(cur) & ~bit(prev);
        int next = std::countr_zero(next_mask);
        if (pos % 3 == 2) blue.set(g.edge_index(cur, next));
        prev = cur;
        cur = next;
    }
    return EdgeColouring{g, blue};
}

PartialColouring end_cut_colouring(const Graph& g, const EndCutProfile& profile) {
    PartialColouring out{EdgeSet(g.edge_count()), EdgeSet(g.edge_count())};
    auto paint_red = [&](int ei) {
        if (ei < 0 || ei >= g.edge_count())
            throw std::invalid_argument("end_cut_colouring: stale profile");
        out.red.set(ei);
    };
    for (int ei : profile.parent_edges) paint_red(ei);
    for (int ei : profile.k2_edges) paint_red(ei);
    for (int ei : profile.cycle_end_edges) paint_red(ei);
    for (const auto& path : profile.cycle_paths) {
        for (std::size_t j = 0; j + 1 < path.size(); ++j) {
            int ei = g.edge_index(path[j], path[j + 1]);
            if (ei < 0) throw std::invalid_argument("end_cut_colouring: stale profile");
            if (j % 3 == 0)
                out.blue.set(ei);
            else
                out.red.set(ei);
        }
    }
    return out;
}

} // namespace ramsey
