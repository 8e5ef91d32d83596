#include "ramsey/matching.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace ramsey;
namespace oracle = ramsey::testing;

namespace {

Graph k33_minus_e() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
            if (!(i == 0 && j == 3)) edges.emplace_back(i, j);
    return graph_from_pairs(6, edges);
}

} // namespace

TEST_CASE("matching_number on named graphs") {
    CHECK(matching_number(cycle_graph(4)) == 2);
    Graph k = k33_minus_e();
    CHECK(matching_number(k) == 3);
    CHECK(matching_number(k) == oracle::brute_matching_number(k));
    CHECK(matching_number(Graph(1, {})) == 0);
    CHECK(matching_number(cycle_graph(5)) == 2); // odd cycle exercises blossoms
    CHECK(matching_number(complete_graph(6)) == 3);
    CHECK(matching_number(matching_graph(4)) == 4);
    CHECK(matching_number(complete_bipartite_graph(2, 5)) == 2);
}

TEST_CASE("blossom structures: odd components") {
    // Two triangles joined by a bridge: nu = 3 needs the bridge.
    Graph g = graph_from_pairs(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(matching_number(g) == 3);
    // Petersen graph has a perfect matching.
    Graph petersen = graph_from_pairs(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(matching_number(petersen) == 5);
}

TEST_CASE("matching oracle equivalence up to 14 edges") {
    // Exhaustive small corpus.
    for (int m = 1; m <= 5; ++m)
        for (const Graph& g : oracle::brute_graph_classes(m, 2, m + 1, false))
            CHECK(matching_number(g) == oracle::brute_matching_number(g));
    // Randomized corpus.
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = oracle::random_graph(rng, 2, 12, 14);
        CAPTURE(g.vertex_count());
        CHECK(matching_number(g) == oracle::brute_matching_number(g));
    }
}

TEST_CASE("witness matching is a maximum matching") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_graph(rng, 2, 10, 14);
        Matching m = maximum_matching(g);
        CHECK(is_valid_matching(g, m));
        CHECK(m.size() == matching_number(g));
    }
}

TEST_CASE("edge deletion changes nu by at most one") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = oracle::random_graph(rng, 2, 10, 12);
        if (g.edge_count() == 0) continue;
        int nu = matching_number(g);
        for (int e = 0; e < g.edge_count(); ++e) {
            EdgeSet s(g.edge_count());
            s.set(e);
            int nu2 = matching_number(delete_edges(g, s));
            CHECK(nu2 >= nu - 1);
            CHECK(nu2 <= nu);
        }
    }
}

TEST_CASE("masked matching ignores edges outside the set") {
    Graph c6 = cycle_graph(6);
    EdgeSet red(c6.edge_count());
    red.set(0);
    red.set(1);
    CHECK(matching_number(c6, red) == 1); // two adjacent edges
    Matching m = maximum_matching(c6, red);
    CHECK(m.size() == 1);
    CHECK(is_valid_matching(c6, m));
}
