#include "ramsey/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace ramsey {

// --- EdgeSet ---

EdgeSet::EdgeSet(int host_edge_count)
    : capacity_(host_edge_count), words_((host_edge_count + 63) / 64, 0) {
    if (host_edge_count < 0)
        throw std::invalid_argument("EdgeSet: negative capacity");
}

EdgeSet EdgeSet::from_mask(int host_edge_count, std::uint64_t mask) {
    EdgeSet s(host_edge_count);
    if (host_edge_count < 64 && (mask >> host_edge_count) != 0)
        throw std::invalid_argument("EdgeSet: mask exceeds host edge count");
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

bool EdgeSet::test(int i) const {
    assert(i >= 0 && i < capacity_);
    return (words_[i / 64] >> (i % 64)) & 1u;
}

void EdgeSet::set(int i) {
    if (i < 0 || i >= capacity_)
        throw std::out_of_range("EdgeSet::set: index outside host edge range");
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void EdgeSet::reset(int i) {
    if (i < 0 || i >= capacity_)
        throw std::out_of_range("EdgeSet::reset: index outside host edge range");
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

int EdgeSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool EdgeSet::empty() const {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

EdgeSet EdgeSet::operator|(const EdgeSet& o) const {
    assert(capacity_ == o.capacity_);
    EdgeSet r(capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
}

EdgeSet EdgeSet::operator&(const EdgeSet& o) const {
    assert(capacity_ == o.capacity_);
    EdgeSet r(capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
}

EdgeSet EdgeSet::complement() const {
    EdgeSet r(capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    int tail = capacity_ % 64;
    if (tail != 0 && !r.words_.empty())
        r.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return r;
}

bool EdgeSet::is_subset_of(const EdgeSet& o) const {
    assert(capacity_ == o.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
}

void EdgeSet::for_each(const std::function<void(int)>& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w != 0) {
            int b = std::countr_zero(w);
            fn(static_cast<int>(wi * 64 + b));
            w &= w - 1;
        }
    }
}

std::vector<int> EdgeSet::indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
}

std::size_t EdgeSet::Hash::operator()(const EdgeSet& s) const {
    std::size_t h = std::hash<int>{}(s.capacity());
    s.for_each([&](int i) { h ^= std::hash<int>{}(i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); });
    return h;
}

// --- Graph ---

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adj_(vertex_count, 0) {
    if (vertex_count < 1 || vertex_count > kMaxVertices)
        throw std::invalid_argument("Graph: vertex count must be in 1..64");
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw std::invalid_argument("Graph: self-loop");
        if (e.u < 0 || e.v >= vertex_count_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge");
    for (const auto& e : edges_) {
        adj_[e.u] |= std::uint64_t{1} << e.v;
        adj_[e.v] |= std::uint64_t{1} << e.u;
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    return (adj_[u] >> v) & 1u;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it != edges_.end() && *it == key) return static_cast<int>(it - edges_.begin());
    return -1;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < vertex_count_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    int d = vertex_count_;
    for (int v = 0; v < vertex_count_; ++v) d = std::min(d, degree(v));
    return d;
}

// --- structural primitives ---

std::vector<std::uint64_t> components(const Graph& g) {
    std::vector<std::uint64_t> comps;
    std::uint64_t all = (g.vertex_count() == 64) ? ~std::uint64_t{0}
                                                 : (std::uint64_t{1} << g.vertex_count()) - 1;
    std::uint64_t seen = 0;
    while (seen != all) {
        int start = std::countr_zero(~seen & all);
        std::uint64_t comp = std::uint64_t{1} << start;
        std::uint64_t frontier = comp;
        while (frontier != 0) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f != 0) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbours(v);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

Graph delete_edges(const Graph& g, const EdgeSet& s) {
    if (s.capacity() != g.edge_count())
        throw std::invalid_argument("delete_edges: subset sized for a different host");
    std::vector<Edge> kept;
    kept.reserve(g.edge_count() - s.count());
    for (int i = 0; i < g.edge_count(); ++i)
        if (!s.test(i)) kept.push_back(g.edge(i));
    return Graph(g.vertex_count(), std::move(kept));
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("delete_vertex: vertex out of range");
    if (g.vertex_count() < 2)
        throw std::invalid_argument("delete_vertex: cannot delete the only vertex");
    std::vector<Edge> kept;
    for (const auto& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        kept.push_back(Edge{e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v});
    }
    return Graph(g.vertex_count() - 1, std::move(kept));
}

Graph edge_subgraph(const Graph& g, const EdgeSet& s) {
    if (s.capacity() != g.edge_count())
        throw std::invalid_argument("edge_subgraph: subset sized for a different host");
    std::vector<Edge> kept;
    kept.reserve(s.count());
    s.for_each([&](int i) { kept.push_back(g.edge(i)); });
    return Graph(g.vertex_count(), std::move(kept));
}

std::vector<std::uint64_t> masked_adjacency(const Graph& g, const EdgeSet& s) {
    std::vector<std::uint64_t> adj(g.vertex_count(), 0);
    s.for_each([&](int i) {
        const Edge& e = g.edge(i);
        adj[e.u] |= std::uint64_t{1} << e.v;
        adj[e.v] |= std::uint64_t{1} << e.u;
    });
    return adj;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::uint64_t used = 0;
    for (int i : m.edges) {
        if (i < 0 || i >= g.edge_count()) return false;
        const Edge& e = g.edge(i);
        std::uint64_t bits = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
        if (used & bits) return false;
        used |= bits;
    }
    return true;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) edges.push_back(Edge{perm[e.u], perm[e.v]});
    return Graph(g.vertex_count(), std::move(edges));
}

// --- factories ---

Graph path_graph(int m) {
    if (m < 1) throw std::invalid_argument("path_graph: need at least one vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < m; ++i) edges.push_back(Edge{i, i + 1});
    return Graph(m, std::move(edges));
}

Graph cycle_graph(int k) {
    if (k < 3) throw std::invalid_argument("cycle_graph: need at least three vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back(Edge{i, i + 1});
    edges.push_back(Edge{0, k - 1});
    return Graph(k, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back(Edge{i, j});
    return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back(Edge{i, a + j});
    return Graph(a + b, std::move(edges));
}

Graph matching_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(Edge{2 * i, 2 * i + 1});
    return Graph(2 * n, std::move(edges));
}

Graph graph_from_pairs(int vertex_count, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back(Edge{u, v});
    return Graph(vertex_count, std::move(edges));
}

} // namespace ramsey
