#include "ramsey/search.hpp"

#include "ramsey/arrowing.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/version.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ramsey {

std::string search_status_name(SearchRecord::Status s) {
    switch (s) {
    case SearchRecord::Status::exact: return "exact";
    case SearchRecord::Status::lower_bound_only: return "lower_bound_only";
    case SearchRecord::Status::upper_bound_only: return "upper_bound_only";
    }
    return "?";
}

SearchRecord::Status search_status_from_name(const std::string& s) {
    if (s == "exact") return SearchRecord::Status::exact;
    if (s == "lower_bound_only") return SearchRecord::Status::lower_bound_only;
    if (s == "upper_bound_only") return SearchRecord::Status::upper_bound_only;
    throw std::invalid_argument("unknown search status '" + s + "'");
}

namespace {

// Index of the first arrowing graph, or -1. Workers take graphs in
// enumeration order and skip anything past the best hit found so far, which
// keeps the result equal to the sequential one.
long long first_arrowing_index(const std::vector<Graph>& graphs, int n,
                               const TargetPattern& target, int jobs) {
    if (graphs.empty()) return -1;
    std::atomic<std::size_t> next{0};
    std::atomic<long long> best{static_cast<long long>(graphs.size())};

    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= graphs.size()) return;
            if (static_cast<long long>(i) >= best.load()) continue;
            if (has_good_colouring(graphs[i], n, target).arrows) {
                long long expect = best.load();
                while (static_cast<long long>(i) < expect &&
                       !best.compare_exchange_weak(expect, static_cast<long long>(i))) {
                }
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    long long found = best.load();
    return found == static_cast<long long>(graphs.size()) ? -1 : found;
}

} // namespace

SearchRecord minimum_arrowing_size(const TargetPattern& target, int n, const SearchOptions& opt) {
    if (n < 1) throw std::invalid_argument("minimum_arrowing_size: n must be positive");
    if (opt.max_edges < 1)
        throw std::invalid_argument("minimum_arrowing_size: max_edges must be positive");

    auto t0 = std::chrono::steady_clock::now();
    SearchRecord rec;
    rec.target = target;
    rec.n = n;
    rec.connected_only = opt.connected_only;
    rec.engine_version = kEngineVersion;

    int cap = opt.max_vertices > 0 ? opt.max_vertices : default_max_vertices(opt.max_edges);
    GraphEnumerator enumerator(cap);
    std::uint64_t examined_below = 0;

    for (int m = 1; m <= opt.max_edges; ++m) {
        EnumerationSpec spec;
        spec.edge_count = m;
        spec.min_vertices = opt.min_vertices;
        spec.max_vertices = opt.max_vertices; // 0 -> m + 1 default per level
        spec.connected_only = opt.connected_only;
        spec.profile = opt.profile;
        spec.aggressive_n = opt.aggressive_prune ? n : 0;
        spec.allow_large = opt.allow_large;

        std::vector<Graph> graphs;
        enumerate_graphs(enumerator, spec, [&](const Graph& g) { graphs.push_back(g); });

        long long hit = first_arrowing_index(graphs, n, target, opt.jobs);
        if (hit >= 0) {
            rec.status = SearchRecord::Status::exact;
            rec.lo = rec.hi = m;
            rec.witness = graph6_encode(graphs[hit]);
            rec.graphs_examined = examined_below + static_cast<std::uint64_t>(hit) + 1;
            rec.wall_time_ms = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count());
            return rec;
        }
        examined_below += graphs.size();
    }

    rec.status = SearchRecord::Status::lower_bound_only;
    rec.lo = opt.max_edges + 1;
    rec.hi = 0;
    rec.graphs_examined = examined_below;
    rec.wall_time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              t0)
            .count());
    return rec;
}

void verify_record(const SearchRecord& record) {
    if (record.status != SearchRecord::Status::exact) return;
    if (!record.witness)
        throw cache_error("record " + target_to_string(record.target) + " n=" +
                          std::to_string(record.n) + ": exact status without witness");
    Graph g = graph6_decode(*record.witness);
    if (g.edge_count() != record.value())
        throw cache_error("record " + target_to_string(record.target) + " n=" +
                          std::to_string(record.n) + ": witness has " +
                          std::to_string(g.edge_count()) + " edges, expected " +
                          std::to_string(record.value()));
    if (record.connected_only && !is_connected(g))
        throw cache_error("record " + target_to_string(record.target) + " n=" +
                          std::to_string(record.n) + ": witness is not connected");
    if (g.edge_count() <= 30 && !has_good_colouring(g, record.n, record.target).arrows)
        throw cache_error("record " + target_to_string(record.target) + " n=" +
                          std::to_string(record.n) + ": witness does not arrow");
}

} // namespace ramsey
