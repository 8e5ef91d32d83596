#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

constexpr int kMaxVertices = 64;

// One undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Subset of the edges of a host graph, as a bitmask over edge indices.
// Sized at construction for the host's edge count; graphs can exceed 64
// edges (chained constructions), so the mask is word-vector backed.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int host_edge_count);
    static EdgeSet from_mask(int host_edge_count, std::uint64_t mask);

    int capacity() const { return capacity_; }
    bool test(int i) const;
    void set(int i);
    void reset(int i);
    int count() const;
    bool empty() const;
    bool none() const { return empty(); }

    // Low 64 bits of the mask; exact when capacity <= 64.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    EdgeSet operator|(const EdgeSet& o) const;
    EdgeSet operator&(const EdgeSet& o) const;
    EdgeSet complement() const; // within 0..capacity-1
    bool is_subset_of(const EdgeSet& o) const;

    void for_each(const std::function<void(int)>& fn) const;
    std::vector<int> indices() const;

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

    struct Hash {
        std::size_t operator()(const EdgeSet& s) const;
    };

private:
    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

// Pairwise vertex-disjoint set of edges of a host graph, by edge index.
struct Matching {
    std::vector<int> edges;
    int size() const { return static_cast<int>(edges.size()); }
};

// Small simple undirected graph on 1..64 vertices. Edges are kept
// lexicographically sorted with u < v; the position in that list is the
// edge's stable index. Adjacency is mirrored into per-vertex bitsets.
// Immutable after construction.
class Graph {
public:
    Graph() = default; // empty placeholder; not a valid 0-vertex graph
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }

    std::uint64_t neighbours(int v) const { return adj_[v]; }
    const std::vector<std::uint64_t>& adjacency() const { return adj_; }
    bool has_edge(int u, int v) const;
    int edge_index(int u, int v) const; // -1 if absent
    int degree(int v) const;
    int max_degree() const;
    int min_degree() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
};

// --- structural primitives ---

// True iff every vertex lies in one component. Isolated vertices count as
// components, so any graph containing one (with other vertices present) is
// not connected. K1 is connected by the one-component rule.
bool is_connected(const Graph& g);

// Components as vertex bitmasks, in increasing order of lowest vertex.
std::vector<std::uint64_t> components(const Graph& g);

// g with the edges in s removed; vertex set unchanged. Edge indices of the
// result are re-derived from its own sorted edge list.
Graph delete_edges(const Graph& g, const EdgeSet& s);

// g with vertex v and its incident edges removed; remaining vertices are
// re-indexed order-preservingly. Requires vertex_count >= 2.
Graph delete_vertex(const Graph& g, int v);

// Keep-all-vertices subgraph with only the edges in s.
Graph edge_subgraph(const Graph& g, const EdgeSet& s);

// Adjacency bitsets of the subgraph restricted to the edges in s.
std::vector<std::uint64_t> masked_adjacency(const Graph& g, const EdgeSet& s);

bool is_valid_matching(const Graph& g, const Matching& m);

// Relabel: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

// --- factories ---

Graph path_graph(int m);                     // P_m, m >= 1 vertices
Graph cycle_graph(int k);                    // C_k, k >= 3
Graph complete_graph(int n);                 // K_n
Graph complete_bipartite_graph(int a, int b);
Graph matching_graph(int n);                 // nK2
Graph graph_from_pairs(int vertex_count, const std::vector<std::pair<int, int>>& pairs);

} // namespace ramsey
