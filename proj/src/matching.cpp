#include "ramsey/matching.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ramsey {
namespace detail {

// Augmenting-path search with blossom contraction. BFS grows an alternating
// forest from one exposed root at a time; odd cycles are contracted by
// rebasing every blossom vertex onto the cycle's base vertex. O(V^3), which
// is far below the 64-vertex cap's needs.
namespace {

struct BlossomSolver {
    int n;
    const std::vector<std::uint64_t>& adj;
    std::vector<int> mate, parent, base;
    std::vector<char> in_queue, in_blossom;
    std::vector<int> queue;

    BlossomSolver(const std::vector<std::uint64_t>& a, int n_)
        : n(n_), adj(a), mate(n, -1), parent(n, -1), base(n), in_queue(n), in_blossom(n) {}

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(n, false);
        for (;;) {
            a = base[a];
            seen[a] = true;
            if (mate[a] == -1) break;
            a = parent[mate[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[mate[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = true;
            in_blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    void contract(int v, int to) {
        int b = lowest_common_base(v, to);
        std::fill(in_blossom.begin(), in_blossom.end(), false);
        mark_path(v, b, to);
        mark_path(to, b, v);
        for (int i = 0; i < n; ++i) {
            if (!in_blossom[base[i]]) continue;
            base[i] = b;
            if (!in_queue[i]) {
                in_queue[i] = true;
                queue.push_back(i);
            }
        }
    }

    // Returns the exposed endpoint of an augmenting path from root, or -1.
    int find_augmenting_path(int root) {
        std::fill(parent.begin(), parent.end(), -1);
        std::fill(in_queue.begin(), in_queue.end(), false);
        std::iota(base.begin(), base.end(), 0);
        queue.clear();
        queue.push_back(root);
        in_queue[root] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            std::uint64_t nb = adj[v];
            while (nb != 0) {
                int to = std::countr_zero(nb);
                nb &= nb - 1;
                if (base[v] == base[to] || mate[v] == to) continue;
                if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
                    contract(v, to);
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (mate[to] == -1) return to;
                    if (!in_queue[mate[to]]) {
                        in_queue[mate[to]] = true;
                        queue.push_back(mate[to]);
                    }
                }
            }
        }
        return -1;
    }

    void augment(int exposed) {
        int v = exposed;
        while (v != -1) {
            int pv = parent[v];
            int next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }

    int solve() {
        // Greedy seed keeps the number of augmenting phases small.
        for (int v = 0; v < n; ++v) {
            if (mate[v] != -1) continue;
            std::uint64_t nb = adj[v];
            while (nb != 0) {
                int to = std::countr_zero(nb);
                nb &= nb - 1;
                if (mate[to] == -1) {
                    mate[v] = to;
                    mate[to] = v;
                    break;
                }
            }
        }
        int matched = 0;
        for (int v = 0; v < n; ++v)
            if (mate[v] != -1) ++matched;
        matched /= 2;
        for (int v = 0; v < n; ++v) {
            if (mate[v] != -1) continue;
            int exposed = find_augmenting_path(v);
            if (exposed != -1) {
                augment(exposed);
                ++matched;
            }
        }
        return matched;
    }
};

} // namespace

int max_matching_adj(const std::vector<std::uint64_t>& adj, int n, std::vector<int>& mate) {
    BlossomSolver solver(adj, n);
    int size = solver.solve();
    mate = std::move(solver.mate);
    return size;
}

} // namespace detail

int matching_number(const Graph& g) {
    std::vector<int> mate;
    return detail::max_matching_adj(g.adjacency(), g.vertex_count(), mate);
}

int matching_number(const Graph& g, const EdgeSet& red) {
    std::vector<int> mate;
    auto adj = masked_adjacency(g, red);
    return detail::max_matching_adj(adj, g.vertex_count(), mate);
}

namespace {

Matching mate_to_matching(const Graph& g, const std::vector<int>& mate) {
    Matching m;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (mate[v] > v) {
            int idx = g.edge_index(v, mate[v]);
            m.edges.push_back(idx);
        }
    }
    return m;
}

} // namespace

Matching maximum_matching(const Graph& g) {
    std::vector<int> mate;
    detail::max_matching_adj(g.adjacency(), g.vertex_count(), mate);
    return mate_to_matching(g, mate);
}

Matching maximum_matching(const Graph& g, const EdgeSet& red) {
    std::vector<int> mate;
    auto adj = masked_adjacency(g, red);
    detail::max_matching_adj(adj, g.vertex_count(), mate);
    return mate_to_matching(g, mate);
}

} // namespace ramsey
