#include "ramsey/arrowing.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/subgraph.hpp"

#include <bit>
#include <stdexcept>

namespace ramsey {
namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

void check_preconditions(const Graph& g, int n, int guard, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be positive");
    if (g.edge_count() > guard)
        throw instance_too_large(std::string(who) + ": instance too large (more than " +
                                 std::to_string(guard) + " edges)");
}

struct EngineState {
    const Graph& g;
    int n;
    const TargetPattern& h;
    int m;
    std::vector<std::uint64_t> blue_adj;
    std::uint64_t blue_mask = 0;
    // Greedily maintained matching among the edges decided red so far; a
    // sound lower bound on the red matching number of any completion.
    std::uint64_t greedy_matched = 0;
    int greedy_size = 0;
    SearchStats stats;
    std::optional<std::uint64_t> witness_blue;

    EngineState(const Graph& g_, int n_, const TargetPattern& h_)
        : g(g_), n(n_), h(h_), m(g_.edge_count()), blue_adj(g_.vertex_count(), 0) {}

    bool can_extend(int e) const {
        const Edge& ed = g.edge(e);
        return detail::extension_ok_adj(blue_adj, g.vertex_count(), ed.u, ed.v, h);
    }

    // True once a good colouring is found (stops the search).
    bool search(int next) {
        ++stats.nodes;
        if (next == m) {
            for (int e = 0; e < m; ++e)
                if (!(blue_mask & (std::uint64_t{1} << e)) && can_extend(e))
                    return false; // a red edge could be absorbed: non-maximal leaf
            ++stats.maximal_sets_examined;
            EdgeSet red = EdgeSet::from_mask(m, ~blue_mask & ((m == 64) ? ~std::uint64_t{0}
                                                                        : (std::uint64_t{1} << m) - 1));
            if (matching_number(g, red) <= n - 1) {
                witness_blue = blue_mask;
                return true;
            }
            return false;
        }

        const Edge& ed = g.edge(next);
        if (can_extend(next)) {
            blue_mask |= std::uint64_t{1} << next;
            blue_adj[ed.u] |= bit(ed.v);
            blue_adj[ed.v] |= bit(ed.u);
            bool found = search(next + 1);
            blue_adj[ed.u] &= ~bit(ed.v);
            blue_adj[ed.v] &= ~bit(ed.u);
            blue_mask &= ~(std::uint64_t{1} << next);
            if (found) return true;
        }

        // Red branch: extend the greedy forced-red matching when possible.
        bool grew = false;
        if (!(greedy_matched & bit(ed.u)) && !(greedy_matched & bit(ed.v))) {
            greedy_matched |= bit(ed.u) | bit(ed.v);
            ++greedy_size;
            grew = true;
        }
        bool found = false;
        if (greedy_size < n) found = search(next + 1);
        if (grew) {
            greedy_matched &= ~(bit(ed.u) | bit(ed.v));
            --greedy_size;
        }
        return found;
    }
};

} // namespace

ColouringCheck verify_colouring(const EdgeColouring& c, int n, const TargetPattern& h) {
    if (n < 1) throw std::invalid_argument("verify_colouring: n must be positive");
    EdgeSet red = c.red();
    Matching red_matching = maximum_matching(c.host, red);
    if (red_matching.size() >= n) {
        red_matching.edges.resize(n);
        return ColouringCheck{ColouringCheck::Kind::red_violation, std::move(red_matching)};
    }
    if (contains_target(c.host, c.blue, h))
        return ColouringCheck{ColouringCheck::Kind::blue_violation, std::nullopt};
    return ColouringCheck{ColouringCheck::Kind::good, std::nullopt};
}

ArrowingVerdict has_good_colouring(const Graph& g, int n, const TargetPattern& h) {
    check_preconditions(g, n, 30, "has_good_colouring");
    EngineState state(g, n, h);
    bool found = state.search(0);
    ArrowingVerdict verdict;
    verdict.stats = state.stats;
    verdict.arrows = !found;
    if (found)
        verdict.witness = EdgeColouring{g, EdgeSet::from_mask(g.edge_count(), *state.witness_blue)};
    return verdict;
}

ArrowingVerdict naive_arrowing_oracle(const Graph& g, int n, const TargetPattern& h) {
    check_preconditions(g, n, 18, "naive_arrowing_oracle");
    int m = g.edge_count();
    ArrowingVerdict verdict;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        EdgeSet blue = EdgeSet::from_mask(m, mask);
        if (contains_target(g, blue, h)) continue;
        if (matching_number(g, blue.complement()) <= n - 1) {
            verdict.arrows = false;
            verdict.witness = EdgeColouring{g, blue};
            return verdict;
        }
    }
    verdict.arrows = true;
    return verdict;
}

} // namespace ramsey
