// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each check pins its expected values and, where stated, its wall-clock
// budget; run via `ctest -R acceptance` or directly.

#include "ramsey/arrowing.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/decompose.hpp"
#include "ramsey/enumerate.hpp"
#include "ramsey/matching.hpp"
#include "ramsey/refuter.hpp"
#include "ramsey/search.hpp"
#include "ramsey/subgraph.hpp"
#include "ramsey/version.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ramsey;
namespace oracle = ramsey::testing;

namespace {

const TargetPattern P3 = TargetPattern::path(3);
const TargetPattern C3 = TargetPattern::cycle(3);
const TargetPattern C4 = TargetPattern::cycle(4);

int failures = 0;

struct Outcome {
    bool pass;
    std::string detail;
};

void report(int index, const std::string& name, double budget_s,
            const std::function<Outcome()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = fn();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = budget_s <= 0.0 || elapsed <= budget_s;
    bool pass = outcome.pass && in_budget;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s (%.1fs", pass ? "PASS" : "FAIL", index, name.c_str(),
                elapsed);
    if (budget_s > 0.0) std::printf(" of %.0fs budget", budget_s);
    std::printf(") %s\n", outcome.detail.c_str());
    std::fflush(stdout);
}

std::vector<Graph> connected_level(GraphEnumerator& enumerator, int m) {
    EnumerationSpec spec;
    spec.edge_count = m;
    std::vector<Graph> out;
    enumerate_graphs(enumerator, spec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

Outcome criterion1_p3_exact_values() {
    const std::vector<int> expected = {2, 4, 7, 9};
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    for (int n = 1; n <= 4; ++n) {
        SearchOptions opt;
        opt.max_edges = 10;
        opt.jobs = 2;
        SearchRecord rec = minimum_arrowing_size(P3, n, opt);
        if (rec.status != SearchRecord::Status::exact || rec.value() != expected[n - 1])
            return {false, "n=" + std::to_string(n) + " gave " + std::to_string(rec.lo) +
                               ", expected " + std::to_string(expected[n - 1])};
        if (n == 3) {
            double so_far =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (so_far > 60.0)
                return {false, "n<=3 took " + std::to_string(so_far) + "s, budget 60s"};
            detail << "n<=3 in " << so_far << "s; ";
        }
    }
    detail << "values 2,4,7,9";
    return {true, detail.str()};
}

Outcome criterion2_c3_exact_values() {
    SearchOptions opt;
    opt.max_edges = 8;
    opt.jobs = 2;
    SearchRecord r1 = minimum_arrowing_size(C3, 1, opt);
    SearchRecord r2 = minimum_arrowing_size(C3, 2, opt);
    if (r1.value() != 3 || r2.value() != 7)
        return {false, "got " + std::to_string(r1.lo) + "," + std::to_string(r2.lo) +
                           ", expected 3,7"};

    // Exhaustive failure below 7 edges at n=2. The class counts per edge
    // count are pinned; 51 of the 52 classes have at least two edges.
    const std::vector<std::size_t> level_counts = {1, 1, 3, 5, 12, 30};
    GraphEnumerator enumerator(7);
    std::size_t checked = 0;
    for (int m = 1; m <= 6; ++m) {
        auto graphs = connected_level(enumerator, m);
        if (graphs.size() != level_counts[m - 1])
            return {false, "class count mismatch at m=" + std::to_string(m)};
        for (const Graph& g : graphs) {
            if (has_good_colouring(g, 2, C3).arrows)
                return {false, "a graph with " + std::to_string(m) + " edges arrows (2K2, C3)"};
            ++checked;
        }
    }
    if (checked != 52) return {false, "expected 52 classes, saw " + std::to_string(checked)};
    return {true, "values 3,7; all 52 connected classes with <=6 edges fail (51 with >=2 edges)"};
}

Outcome criterion3_c4_chain_upper_bound() {
    for (int n = 1; n <= 20; ++n) {
        Graph g = build_construction({ConstructionFamily::Kind::c4_chain, n});
        int expected = (9 * n - 1) / 2;
        if (g.edge_count() != expected)
            return {false, "n=" + std::to_string(n) + ": " + std::to_string(g.edge_count()) +
                               " edges, expected " + std::to_string(expected)};
        if (!is_connected(g)) return {false, "n=" + std::to_string(n) + ": not connected"};
        if (n <= 2 && !has_good_colouring(g, n, C4).arrows)
            return {false, "n=" + std::to_string(n) + ": construction does not arrow"};
    }
    return {true, "floor((9n-1)/2) edges and connected for n<=20; arrows verified for n<=2"};
}

Outcome criterion4_c4_conjecture_small_n() {
    SearchOptions opt;
    opt.max_edges = 9;
    opt.jobs = 2;
    SearchRecord r1 = minimum_arrowing_size(C4, 1, opt);
    SearchRecord r2 = minimum_arrowing_size(C4, 2, opt);
    if (r1.value() != 4 || r2.value() != 8)
        return {false, "got " + std::to_string(r1.lo) + "," + std::to_string(r2.lo) +
                           ", expected 4,8"};

    GraphEnumerator enumerator(9);
    auto level7 = connected_level(enumerator, 7);
    if (level7.size() != 79)
        return {false, "expected 79 connected 7-edge classes, saw " +
                           std::to_string(level7.size())};
    for (const Graph& g : level7)
        if (has_good_colouring(g, 2, C4).arrows)
            return {false, "a 7-edge graph arrows (2K2, C4)"};
    return {true, "values 4,8; all 79 connected 7-edge classes fail at n=2 "
                  "(n=3 out of scope: desk-scale infeasibility boundary)"};
}

Outcome criterion5_oracle_equivalence() {
    GraphEnumerator enumerator(10);
    std::uint64_t cases = 0;
    for (int m = 1; m <= 9; ++m) {
        for (const Graph& g : connected_level(enumerator, m)) {
            for (const auto& h : {P3, C3, C4}) {
                for (int n = 1; n <= 3; ++n) {
                    bool fast = has_good_colouring(g, n, h).arrows;
                    bool slow = naive_arrowing_oracle(g, n, h).arrows;
                    if (fast != slow)
                        return {false, "mismatch at m=" + std::to_string(m) + " target " +
                                           target_to_string(h) + " n=" + std::to_string(n)};
                    ++cases;
                }
            }
        }
    }
    return {true, std::to_string(cases) + " engine/oracle cases, 0 mismatches"};
}

Outcome criterion6_property_suites() {
    std::ostringstream detail;

    // Matching oracle equivalence: exhaustive to 6 edges, randomized to 14.
    {
        GraphEnumerator enumerator(12);
        for (int m = 1; m <= 6; ++m) {
            EnumerationSpec spec;
            spec.edge_count = m;
            spec.connected_only = false;
            spec.max_vertices = std::min(12, 2 * m);
            std::vector<Graph> graphs;
            enumerate_graphs(enumerator, spec, [&](const Graph& g) { graphs.push_back(g); });
            for (const Graph& g : graphs)
                if (matching_number(g) != oracle::brute_matching_number(g))
                    return {false, "matching mismatch on an " + std::to_string(m) + "-edge graph"};
        }
        std::mt19937 rng(1001);
        for (int trial = 0; trial < 500; ++trial) {
            Graph g = oracle::random_graph(rng, 2, 12, 14);
            if (matching_number(g) != oracle::brute_matching_number(g))
                return {false, "matching mismatch on a random graph"};
        }
        detail << "matching ok; ";
    }

    // Canonical-form relabeling invariance.
    {
        std::mt19937 rng(1002);
        std::vector<Graph> corpus = {path_graph(6), cycle_graph(7), complete_graph(5),
                                     matching_graph(4), complete_bipartite_graph(2, 4),
                                     complete_bipartite_graph(1, 8)};
        for (int extra = 0; extra < 14; ++extra) corpus.push_back(oracle::random_graph(rng, 2, 10, 14));
        for (const Graph& g : corpus) {
            std::string form = canonical_form(g);
            for (int round = 0; round < 1000; ++round) {
                Graph h = relabel(g, oracle::random_permutation(rng, g.vertex_count()));
                if (canonical_form(h) != form) return {false, "canonical form not invariant"};
            }
        }
        detail << "canonical ok; ";
    }

    // Connected enumeration counts.
    {
        const std::vector<std::size_t> expected = {1, 1, 3, 5, 12, 30, 79, 227};
        GraphEnumerator enumerator(9);
        for (int m = 1; m <= 8; ++m) {
            auto graphs = connected_level(enumerator, m);
            if (graphs.size() != expected[m - 1])
                return {false, "enumeration count at m=" + std::to_string(m) + " is " +
                                   std::to_string(graphs.size()) + ", expected " +
                                   std::to_string(expected[m - 1])};
        }
        detail << "counts 1,1,3,5,12,30,79,227; ";
    }

    // End-cut bookkeeping inequality on 10^4 random profiles with t >= 1, t1 >= 1.
    {
        std::mt19937 rng(1003);
        std::uniform_int_distribution<int> t1d(1, 5), t2d(0, 5), td(1, 5), pd(1, 10);
        for (int trial = 0; trial < 10000; ++trial) {
            int t1 = t1d(rng), t2 = t2d(rng), t = td(rng);
            int x = t1 + t2 + 2 * t, y = 1;
            for (int i = 0; i < t; ++i) {
                int p = pd(rng);
                x += p;
                y += (p + 1) / 3;
            }
            if (5 * y > 2 * x) return {false, "end-cut x/y inequality violated"};
        }
        detail << "x/y inequality ok; ";
    }

    // Cycle colouring has no blue P3 for all lengths 3..64.
    for (int len = 3; len <= 64; ++len) {
        EdgeColouring col = cycle_colouring(cycle_graph(len), 2);
        if (contains_target(col.host, col.blue, P3))
            return {false, "cycle colouring has a blue P3 at length " + std::to_string(len)};
    }
    detail << "cycles ok; ";

    // Deletable-set extension lemma on 10^3 instances.
    {
        std::mt19937 rng(1004);
        int verified = 0;
        for (int trial = 0; trial < 100000 && verified < 1000; ++trial) {
            Graph g = oracle::random_connected_graph(rng, 3, 7, 10);
            if (g.edge_count() < 3) continue;
            std::uniform_int_distribution<int> size_dist(1, 3);
            std::uniform_int_distribution<int> edge_dist(0, g.edge_count() - 1);
            EdgeSet e1(g.edge_count());
            int want = size_dist(rng);
            for (int i = 0; i < want; ++i) e1.set(edge_dist(rng));
            auto part = is_deletable_edge_set(g, e1);
            if (!part) continue;
            Graph remainder = edge_subgraph(g, e1.complement());
            std::uniform_int_distribution<int> k_dist(1, 3);
            int k = k_dist(rng);
            ArrowingVerdict sub = naive_arrowing_oracle(remainder, k, P3);
            if (sub.arrows) continue;
            EdgeSet blue(g.edge_count());
            sub.witness->blue.for_each([&](int ei) {
                const Edge& e = remainder.edge(ei);
                blue.set(g.edge_index(e.u, e.v));
            });
            part->matching.for_each([&](int ei) { blue.set(ei); });
            if (verify_colouring(EdgeColouring{g, blue}, k + 1, P3).kind !=
                ColouringCheck::Kind::good)
                return {false, "deletable-set extension failed"};
            ++verified;
        }
        if (verified < 1000)
            return {false, "only " + std::to_string(verified) + " deletable instances found"};
        detail << "deletable x" << verified << " ok; ";
    }

    // Refuter soundness over the <= 8-edge connected corpus.
    {
        GraphEnumerator enumerator(9);
        for (int m = 1; m <= 8; ++m) {
            for (const Graph& g : connected_level(enumerator, m)) {
                for (int n = 1; n <= 3; ++n) {
                    for (const auto& h : {P3, C3}) {
                        auto col = heuristic_refuter(g, n, h);
                        if (!col) continue;
                        if (verify_colouring(*col, n, h).kind != ColouringCheck::Kind::good)
                            return {false, "refuter returned a bad colouring"};
                        if (naive_arrowing_oracle(g, n, h).arrows)
                            return {false, "refuter contradicted the oracle"};
                    }
                }
            }
        }
        detail << "refuter sound";
    }

    return {true, detail.str()};
}

Outcome criterion7_formula_concordance() {
    for (int n = 1; n <= 100; ++n)
        if (path_matching_bound(3, n) != (5 * n - 1) / 2)
            return {false, "path bound disagrees with the exact P3 formula at n=" +
                               std::to_string(n)};
    for (int n = 1; n <= 20; ++n) {
        for (auto kind : {ConstructionFamily::Kind::p3_chain, ConstructionFamily::Kind::c4_chain,
                          ConstructionFamily::Kind::c3_chain}) {
            Graph g = build_construction({kind, n});
            if (g.edge_count() != upper_bound_formula(construction_target(kind), n))
                return {false, std::string(construction_name(kind)) + " edge count off at n=" +
                                   std::to_string(n)};
        }
    }
    return {true, "path bound matches exact P3 formula for n<=100; construction edges match "
                  "formulas for n<=20"};
}

} // namespace

int main() {
    std::printf("acceptance suite (engine %s)\n", kEngineVersion);
    report(1, "exact r_c(nK2, P3) = 2, 4, 7, 9 for n = 1..4", 1800.0, criterion1_p3_exact_values);
    report(2, "exact r_c(nK2, C3) = 3, 7 with exhaustive failure below", 60.0,
           criterion2_c3_exact_values);
    report(3, "c4-chain construction: floor((9n-1)/2) edges, connected, arrows", 0.0,
           criterion3_c4_chain_upper_bound);
    report(4, "C4 values 4, 8 at n = 1, 2 (conjectured formula)", 300.0,
           criterion4_c4_conjecture_small_n);
    report(5, "engine/oracle equivalence on all connected graphs with <= 9 edges", 0.0,
           criterion5_oracle_equivalence);
    report(6, "property suites (matching, canonical, counts, x/y inequality, cycles, deletable, refuter)",
           0.0, criterion6_property_suites);
    report(7, "formula concordance", 0.0, criterion7_formula_concordance);
    if (failures == 0) std::printf("all criteria passed\n");
    return failures;
}
