#include "ramsey/subgraph.hpp"

#include "ramsey/errors.hpp"

#include <bit>
#include <cassert>

namespace ramsey {
namespace detail {
namespace {

using Adj = std::vector<std::uint64_t>;

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

bool dfs_path(const Adj& adj, int cur, std::uint64_t visited, int len, int m) {
    if (len >= m) return true;
    std::uint64_t nb = adj[cur] & ~visited;
    while (nb != 0) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (dfs_path(adj, w, visited | bit(w), len + 1, m)) return true;
    }
    return false;
}

// Simple cycle on exactly k vertices whose lowest vertex is `root`.
bool dfs_cycle(const Adj& adj, int root, int cur, std::uint64_t visited, int len, int k) {
    if (len == k) return (adj[cur] >> root) & 1u;
    std::uint64_t nb = adj[cur] & ~visited;
    while (nb != 0) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (w <= root) continue;
        if (dfs_cycle(adj, root, w, visited | bit(w), len + 1, k)) return true;
    }
    return false;
}

bool dfs_far_side(const Adj& adj, int cur, std::uint64_t visited, int total, int m) {
    if (total >= m) return true;
    std::uint64_t nb = adj[cur] & ~visited;
    while (nb != 0) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (dfs_far_side(adj, w, visited | bit(w), total + 1, m)) return true;
    }
    return false;
}

// Path on >= m vertices through the edge (u, v): grow the u side, and at
// every stage also try finishing on the v side with the shared visited set.
bool dfs_near_side(const Adj& adj, int end_u, int v, std::uint64_t visited, int total, int m) {
    if (total >= m) return true;
    if (dfs_far_side(adj, v, visited, total, m)) return true;
    std::uint64_t nb = adj[end_u] & ~visited;
    while (nb != 0) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (dfs_near_side(adj, w, v, visited | bit(w), total + 1, m)) return true;
    }
    return false;
}

bool path_through_edge(const Adj& adj, int u, int v, int m) {
    if (m <= 2) return true;
    return dfs_near_side(adj, u, v, bit(u) | bit(v), 2, m);
}

// Path u -> v on exactly k vertices (v only at the final position).
bool dfs_exact_path(const Adj& adj, int cur, int v, std::uint64_t visited, int len, int k) {
    if (len == k) return cur == v;
    std::uint64_t nb = adj[cur] & ~visited;
    if (len + 1 < k) nb &= ~bit(v);
    while (nb != 0) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (dfs_exact_path(adj, w, v, visited | bit(w), len + 1, k)) return true;
    }
    return false;
}

} // namespace

bool contains_path_adj(const Adj& adj, int n, int m) {
    if (m > n) return false;
    if (m == 2) {
        for (int v = 0; v < n; ++v)
            if (adj[v] != 0) return true;
        return false;
    }
    if (m == 3) {
        for (int v = 0; v < n; ++v)
            if (std::popcount(adj[v]) >= 2) return true;
        return false;
    }
    for (int v = 0; v < n; ++v)
        if (adj[v] != 0 && dfs_path(adj, v, bit(v), 1, m)) return true;
    return false;
}

bool contains_cycle_adj(const Adj& adj, int n, int k) {
    if (k > n) return false;
    if (k == 3) {
        for (int v = 0; v < n; ++v) {
            std::uint64_t nb = adj[v];
            while (nb != 0) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (u > v && (adj[u] & adj[v]) != 0) return true;
            }
        }
        return false;
    }
    if (k == 4) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::popcount(adj[u] & adj[v]) >= 2) return true;
        return false;
    }
    for (int root = 0; root < n; ++root)
        if (adj[root] != 0 && dfs_cycle(adj, root, root, bit(root), 1, k)) return true;
    return false;
}

bool contains_target_adj(const Adj& adj, int n, const TargetPattern& h) {
    return h.kind == TargetPattern::Kind::path ? contains_path_adj(adj, n, h.order)
                                               : contains_cycle_adj(adj, n, h.order);
}

bool extension_ok_adj(const Adj& blue_adj, int n, int u, int v, const TargetPattern& h) {
    if (h.kind == TargetPattern::Kind::path) {
        if (h.order == 2) return false; // any edge is a P2
        if (h.order == 3) return blue_adj[u] == 0 && blue_adj[v] == 0;
        Adj ext = blue_adj;
        ext[u] |= bit(v);
        ext[v] |= bit(u);
        return !path_through_edge(ext, u, v, h.order);
    }
    if (h.order == 3) return (blue_adj[u] & blue_adj[v]) == 0;
    if (h.order == 4) {
        // Common-neighbour pair closing a C4 with (u, v) absent.
        if (std::popcount(blue_adj[u] & blue_adj[v]) >= 2) return false;
        // Blue path on three edges joining u and v.
        std::uint64_t xs = blue_adj[u] & ~bit(v);
        while (xs != 0) {
            int x = std::countr_zero(xs);
            xs &= xs - 1;
            if ((blue_adj[x] & blue_adj[v] & ~(bit(u) | bit(x))) != 0) return false;
        }
        return true;
    }
    return !dfs_exact_path(blue_adj, u, v, bit(u), 1, h.order);
}

} // namespace detail

bool contains_target(const Graph& g, const TargetPattern& h) {
    return detail::contains_target_adj(g.adjacency(), g.vertex_count(), h);
}

bool contains_target(const Graph& g, const EdgeSet& blue, const TargetPattern& h) {
    auto adj = masked_adjacency(g, blue);
    return detail::contains_target_adj(adj, g.vertex_count(), h);
}

bool blue_extension_ok(const Graph& g, const EdgeSet& blue, int e, const TargetPattern& h) {
    assert(!blue.test(e));
    assert(!contains_target(g, blue, h));
    auto blue_adj = masked_adjacency(g, blue);
    const Edge& edge = g.edge(e);
    return detail::extension_ok_adj(blue_adj, g.vertex_count(), edge.u, edge.v, h);
}

namespace {

struct MaximalSetSearch {
    const Graph& g;
    const TargetPattern& h;
    int m;
    std::vector<std::uint64_t> blue_adj;
    EdgeSet blue;
    std::vector<EdgeSet> out;

    MaximalSetSearch(const Graph& g_, const TargetPattern& h_)
        : g(g_), h(h_), m(g_.edge_count()), blue_adj(g_.vertex_count(), 0), blue(g_.edge_count()) {}

    bool can_add(int e) const {
        const Edge& ed = g.edge(e);
        return detail::extension_ok_adj(blue_adj, g.vertex_count(), ed.u, ed.v, h);
    }

    void rec(int next) {
        if (next == m) {
            for (int e = 0; e < m; ++e)
                if (!blue.test(e) && can_add(e)) return; // not maximal
            out.push_back(blue);
            return;
        }
        if (can_add(next)) {
            const Edge& ed = g.edge(next);
            blue.set(next);
            blue_adj[ed.u] |= std::uint64_t{1} << ed.v;
            blue_adj[ed.v] |= std::uint64_t{1} << ed.u;
            rec(next + 1);
            blue_adj[ed.u] &= ~(std::uint64_t{1} << ed.v);
            blue_adj[ed.v] &= ~(std::uint64_t{1} << ed.u);
            blue.reset(next);
        }
        rec(next + 1);
    }
};

} // namespace

std::vector<EdgeSet> maximal_target_free_sets(const Graph& g, const TargetPattern& h) {
    if (g.edge_count() > 30)
        throw instance_too_large("maximal_target_free_sets: instance too large (more than 30 edges)");
    MaximalSetSearch search(g, h);
    search.rec(0);
    return search.out;
}

} // namespace ramsey
