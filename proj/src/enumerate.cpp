#include "ramsey/enumerate.hpp"

#include "ramsey/canonical.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/subgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ramsey {

namespace {
constexpr int kEnumerationGuard = 13;
}

int default_min_vertices(int edge_count) {
    int nv = 2;
    while (nv * (nv - 1) / 2 < edge_count) ++nv;
    return nv;
}

int default_max_vertices(int edge_count) { return edge_count + 1; }

bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    if (!is_connected(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!is_connected(delete_vertex(g, v))) return false;
    return true;
}

bool passes_pruning_profile(const Graph& g, const EnumerationSpec& spec) {
    if (spec.profile == PruningProfile::none) return true;
    if (g.min_degree() < 2) return false;
    if (g.max_degree() > 3) return false;
    if (!is_two_connected(g)) return false;
    if (spec.aggressive_n > 0 && spec.edge_count <= 4 * spec.aggressive_n - 2) {
        if (g.min_degree() != 3) return false; // 3-regular with max degree <= 3
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if ((g.neighbours(ed.u) & g.neighbours(ed.v)) == 0) return false;
        }
    }
    return true;
}

GraphEnumerator::GraphEnumerator(int vertex_cap) : vertex_cap_(vertex_cap) {
    if (vertex_cap < 2 || vertex_cap > kMaxVertices)
        throw std::invalid_argument("GraphEnumerator: vertex cap must be in 2..64");
    levels_.resize(2);
    levels_[1].push_back(canonical_graph(path_graph(2))); // K2
}

const std::vector<Graph>& GraphEnumerator::level(int edge_count) {
    if (edge_count < 1) throw std::invalid_argument("GraphEnumerator: edge count must be positive");
    while (static_cast<int>(levels_.size()) <= edge_count) {
        int m = static_cast<int>(levels_.size());
        const auto& parents = levels_[m - 1];
        std::unordered_set<std::string> seen;
        std::vector<std::pair<std::string, Graph>> found;

        auto offer = [&](Graph&& child) {
            std::string form = canonical_form(child);
            if (seen.insert(form).second)
                found.emplace_back(std::move(form), canonical_graph(child));
        };

        for (const Graph& p : parents) {
            int nv = p.vertex_count();
            // New edge between existing non-adjacent vertices.
            for (int u = 0; u < nv; ++u)
                for (int v = u + 1; v < nv; ++v) {
                    if (p.has_edge(u, v)) continue;
                    auto edges = p.edges();
                    edges.push_back(Edge{u, v});
                    offer(Graph(nv, std::move(edges)));
                }
            // Pendant edge to a new vertex.
            if (nv + 1 <= vertex_cap_) {
                for (int u = 0; u < nv; ++u) {
                    auto edges = p.edges();
                    edges.push_back(Edge{u, nv});
                    offer(Graph(nv + 1, std::move(edges)));
                }
            }
            // Disjoint K2 on two new vertices.
            if (nv + 2 <= vertex_cap_) {
                auto edges = p.edges();
                edges.push_back(Edge{nv, nv + 1});
                offer(Graph(nv + 2, std::move(edges)));
            }
        }

        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Graph> next;
        next.reserve(found.size());
        for (auto& [form, graph] : found) next.push_back(std::move(graph));
        levels_.push_back(std::move(next));
    }
    return levels_[edge_count];
}

void enumerate_graphs(GraphEnumerator& enumerator, const EnumerationSpec& spec,
                      const std::function<void(const Graph&)>& yield) {
    if (spec.edge_count < 1)
        throw std::invalid_argument("enumerate_graphs: edge count must be positive");
    if (spec.edge_count > kEnumerationGuard && !spec.allow_large)
        throw instance_too_large("enumerate_graphs: edge count " + std::to_string(spec.edge_count) +
                                 " exceeds the guard (" + std::to_string(kEnumerationGuard) +
                                 "); pass the override to proceed");
    int min_v = spec.min_vertices > 0 ? spec.min_vertices : default_min_vertices(spec.edge_count);
    int max_v = spec.max_vertices > 0 ? spec.max_vertices : default_max_vertices(spec.edge_count);
    if (min_v > max_v)
        throw std::invalid_argument("enumerate_graphs: vertex bounds are inconsistent");
    if (max_v > enumerator.vertex_cap())
        throw std::invalid_argument("enumerate_graphs: vertex bound exceeds the enumerator cap");

    for (const Graph& g : enumerator.level(spec.edge_count)) {
        if (g.vertex_count() < min_v || g.vertex_count() > max_v) continue;
        if (spec.connected_only && !is_connected(g)) continue;
        if (!passes_pruning_profile(g, spec)) continue;
        yield(g);
    }
}

std::vector<Graph> enumerate_graphs(const EnumerationSpec& spec) {
    int max_v = spec.max_vertices > 0 ? spec.max_vertices : default_max_vertices(spec.edge_count);
    GraphEnumerator enumerator(std::max(2, max_v));
    std::vector<Graph> out;
    enumerate_graphs(enumerator, spec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

} // namespace ramsey
