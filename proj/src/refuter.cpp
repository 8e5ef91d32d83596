#include "ramsey/refuter.hpp"

#include "ramsey/decompose.hpp"
#include "ramsey/matching.hpp"
#include "ramsey/subgraph.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace ramsey {
namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct Candidate {
    EdgeSet blue; // within the active edges; red is active minus blue
    int red_nu = 0;
};

// Induced view of an active edge set without its isolated vertices, with the
// vertex map back to the host.
struct ActiveView {
    Graph graph;
    std::vector<int> to_host;
    std::vector<int> from_host;
};

ActiveView make_view(const Graph& host, const EdgeSet& active) {
    ActiveView view;
    std::uint64_t used = 0;
    active.for_each([&](int ei) {
        used |= bit(host.edge(ei).u) | bit(host.edge(ei).v);
    });
    view.from_host.assign(host.vertex_count(), -1);
    while (used != 0) {
        int v = std::countr_zero(used);
        used &= used - 1;
        view.from_host[v] = static_cast<int>(view.to_host.size());
        view.to_host.push_back(v);
    }
    std::vector<Edge> edges;
    active.for_each([&](int ei) {
        edges.push_back(Edge{view.from_host[host.edge(ei).u], view.from_host[host.edge(ei).v]});
    });
    view.graph = Graph(std::max<std::size_t>(view.to_host.size(), 1), std::move(edges));
    return view;
}

struct Refuter {
    const Graph& host;
    TargetPattern h;
    std::unordered_map<EdgeSet, std::optional<Candidate>, EdgeSet::Hash> memo;

    Refuter(const Graph& g, const TargetPattern& h_) : host(g), h(h_) {}

    int exact_red_nu(const EdgeSet& active, const EdgeSet& blue) const {
        EdgeSet red(host.edge_count());
        active.for_each([&](int ei) {
            if (!blue.test(ei)) red.set(ei);
        });
        return matching_number(host, red);
    }

    std::optional<Candidate> improve(std::optional<Candidate> best, const EdgeSet& active,
                                     EdgeSet blue) {
        // Only keep candidates whose blue part stays h-free; composition
        // strategies are designed to preserve it, this is the safety net.
        if (contains_target(host, blue, h)) return best;
        Candidate c{std::move(blue), 0};
        c.red_nu = exact_red_nu(active, c.blue);
        if (!best || c.red_nu < best->red_nu) return c;
        return best;
    }

    std::optional<Candidate> solve(const EdgeSet& active) {
        auto it = memo.find(active);
        if (it != memo.end()) return it->second;
        auto result = solve_uncached(active);
        memo.emplace(active, result);
        return result;
    }

    std::optional<Candidate> solve_uncached(const EdgeSet& active) {
        if (active.empty()) return Candidate{EdgeSet(host.edge_count()), 0};

        // All blue when the active part is already h-free; nothing beats
        // a red matching of zero.
        if (!contains_target(host, active, h)) return Candidate{active, 0};

        ActiveView view = make_view(host, active);

        // Component split: colour each edge component independently.
        auto comps = components(view.graph);
        std::vector<std::uint64_t> edge_comps;
        for (auto comp : comps)
            if (std::popcount(comp) >= 2) edge_comps.push_back(comp);
        if (edge_comps.size() > 1) {
            EdgeSet blue(host.edge_count());
            for (auto comp : edge_comps) {
                EdgeSet part(host.edge_count());
                active.for_each([&](int ei) {
                    if (comp & bit(view.from_host[host.edge(ei).u])) part.set(ei);
                });
                auto sub = solve(part);
                if (!sub) return std::nullopt;
                blue = blue | sub->blue;
            }
            return improve(std::nullopt, active, std::move(blue));
        }

        std::optional<Candidate> best;

        best = try_cycle(best, active, view);
        best = try_bridge_split(best, active, view);
        best = try_end_cut_peel(best, active, view);
        if (h.kind == TargetPattern::Kind::cycle && h.order == 3)
            best = try_blue_nontriangle_edge(best, active, view);
        best = try_red_star(best, active, view);
        return best;
    }

    // The 2-connected remnant of the proofs is a cycle: walk it red, red,
    // blue (no blue P3); a triangle against C3 is simply painted all red.
    std::optional<Candidate> try_cycle(std::optional<Candidate> best, const EdgeSet& active,
                                       const ActiveView& view) {
        const Graph& sub = view.graph;
        if (sub.vertex_count() < 3 || sub.edge_count() != sub.vertex_count()) return best;
        for (int v = 0; v < sub.vertex_count(); ++v)
            if (sub.degree(v) != 2) return best;

        if (h.kind == TargetPattern::Kind::path && h.order == 3) {
            EdgeColouring pattern = cycle_colouring(sub, 1);
            EdgeSet blue(host.edge_count());
            pattern.blue.for_each([&](int ei) {
                const Edge& e = sub.edge(ei);
                blue.set(host.edge_index(view.to_host[e.u], view.to_host[e.v]));
            });
            return improve(std::move(best), active, std::move(blue));
        }
        if (h.kind == TargetPattern::Kind::cycle && h.order == 3 && sub.vertex_count() == 3)
            return improve(std::move(best), active, EdgeSet(host.edge_count())); // all red
        return best;
    }

    // Cut-edge composition: a bridge closes no cycle, so against C3 it can
    // be coloured blue for free; against P3 it is safe blue only when both
    // endpoint stay blue-isolated, otherwise red.
    std::optional<Candidate> try_bridge_split(std::optional<Candidate> best, const EdgeSet& active,
                                              const ActiveView& view) {
        const Graph& sub = view.graph;
        if (sub.edge_count() < 2) return best;
        BlockDecomposition dec = block_decompose(sub);
        int bridge = -1;
        for (const auto& block : dec.blocks)
            if (block.is_k2) {
                int ei = block.edges.indices()[0];
                if (bridge == -1 || ei < bridge) bridge = ei;
            }
        if (bridge == -1) return best;

        const Edge& be = sub.edge(bridge);
        int host_bridge = host.edge_index(view.to_host[be.u], view.to_host[be.v]);
        EdgeSet rest(host.edge_count());
        active.for_each([&](int ei) {
            if (ei != host_bridge) rest.set(ei);
        });
        auto sub_result = solve(rest); // splits into components internally
        if (!sub_result) return best;

        EdgeSet blue = sub_result->blue;
        bool bridge_blue;
        if (h.kind == TargetPattern::Kind::cycle) {
            bridge_blue = true;
        } else {
            auto blue_adj = masked_adjacency(host, blue);
            bridge_blue = blue_adj[host.edge(host_bridge).u] == 0 &&
                          blue_adj[host.edge(host_bridge).v] == 0;
        }
        if (bridge_blue) blue.set(host_bridge);
        return improve(std::move(best), active, std::move(blue));
    }

    // End-cut peel: colour the profile's x edges (red matching exactly y),
    // recurse on the rest.
    std::optional<Candidate> try_end_cut_peel(std::optional<Candidate> best, const EdgeSet& active,
                                              const ActiveView& view) {
        const Graph& sub = view.graph;
        if (sub.vertex_count() < 3) return best;
        BlockDecomposition dec = block_decompose(sub);
        if (dec.cut_vertices == 0) return best;
        int root = std::countr_zero(dec.cut_vertices);
        auto profiles = find_end_cuts(sub, root);
        if (profiles.empty()) return best;
        const EndCutProfile& profile = profiles.front();
        PartialColouring part = end_cut_colouring(sub, profile);

        EdgeSet coloured_host(host.edge_count());
        EdgeSet blue(host.edge_count());
        auto lift = [&](const EdgeSet& sub_set, bool is_blue) {
            sub_set.for_each([&](int ei) {
                const Edge& e = sub.edge(ei);
                int hi = host.edge_index(view.to_host[e.u], view.to_host[e.v]);
                coloured_host.set(hi);
                if (is_blue) blue.set(hi);
            });
        };
        lift(part.red, false);
        lift(part.blue, true);

        EdgeSet rest(host.edge_count());
        active.for_each([&](int ei) {
            if (!coloured_host.test(ei)) rest.set(ei);
        });
        auto sub_result = solve(rest);
        if (!sub_result) return best;
        return improve(std::move(best), active, blue | sub_result->blue);
    }

    // An edge lying in no triangle of the active part can be coloured blue
    // against C3; recurse on the rest.
    std::optional<Candidate> try_blue_nontriangle_edge(std::optional<Candidate> best,
                                                       const EdgeSet& active,
                                                       const ActiveView& view) {
        const Graph& sub = view.graph;
        int pick = -1;
        for (int ei = 0; ei < sub.edge_count() && pick == -1; ++ei) {
            const Edge& e = sub.edge(ei);
            if ((sub.neighbours(e.u) & sub.neighbours(e.v)) == 0) pick = ei;
        }
        if (pick == -1) return best;
        const Edge& e = sub.edge(pick);
        int host_e = host.edge_index(view.to_host[e.u], view.to_host[e.v]);
        EdgeSet rest(host.edge_count());
        active.for_each([&](int ei) {
            if (ei != host_e) rest.set(ei);
        });
        auto sub_result = solve(rest);
        if (!sub_result) return best;
        EdgeSet blue = sub_result->blue;
        blue.set(host_e);
        return improve(std::move(best), active, std::move(blue));
    }

    // Red star at the maximum-degree vertex: costs at most one red matching
    // edge and always shrinks the active part.
    std::optional<Candidate> try_red_star(std::optional<Candidate> best, const EdgeSet& active,
                                          const ActiveView& view) {
        const Graph& sub = view.graph;
        int v = 0;
        for (int u = 1; u < sub.vertex_count(); ++u)
            if (sub.degree(u) > sub.degree(v)) v = u;
        if (sub.degree(v) == 0) return best;
        int host_v = view.to_host[v];
        EdgeSet rest(host.edge_count());
        active.for_each([&](int ei) {
            const Edge& e = host.edge(ei);
            if (e.u != host_v && e.v != host_v) rest.set(ei);
        });
        auto sub_result = solve(rest);
        if (!sub_result) return best;
        return improve(std::move(best), active, sub_result->blue);
    }
};

} // namespace

std::optional<EdgeColouring> heuristic_refuter(const Graph& g, int n, const TargetPattern& h) {
    if (n < 1) throw std::invalid_argument("heuristic_refuter: n must be positive");
    bool supported = (h.kind == TargetPattern::Kind::path && h.order == 3) ||
                     (h.kind == TargetPattern::Kind::cycle && h.order == 3);
    if (!supported)
        throw std::invalid_argument("heuristic_refuter: only P3 and C3 targets are supported");

    EdgeSet all(g.edge_count());
    all = all.complement();
    Refuter refuter(g, h);
    auto result = refuter.solve(all);
    if (!result || result->red_nu > n - 1) return std::nullopt;

    EdgeColouring colouring{g, result->blue};
    if (verify_colouring(colouring, n, h).kind != ColouringCheck::Kind::good) return std::nullopt;
    return colouring;
}

} // namespace ramsey
