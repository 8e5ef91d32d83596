#pragma once

#include "ramsey/enumerate.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace ramsey {

// Persisted result of one minimum-arrowing-size query, keyed by
// (target, n, connected_only).
struct SearchRecord {
    TargetPattern target;
    int n = 1;
    bool connected_only = true;
    enum class Status { exact, lower_bound_only, upper_bound_only };
    Status status = Status::exact;
    int lo = 0;
    int hi = 0;                         // equal to lo when exact
    std::optional<std::string> witness; // graph6, present when exact
    // Graphs inspected under the sequential search semantics (independent of
    // worker count): full lower levels plus the prefix of the final level up
    // to the first arrowing graph.
    std::uint64_t graphs_examined = 0;
    std::uint64_t wall_time_ms = 0;
    std::string engine_version;

    int value() const { return lo; }
};

std::string search_status_name(SearchRecord::Status s);
SearchRecord::Status search_status_from_name(const std::string& s);

struct SearchOptions {
    int max_edges = 13;
    int jobs = 1;
    bool connected_only = true;
    PruningProfile profile = PruningProfile::none;
    bool aggressive_prune = false; // adds the size-bounded extra conditions to the c3 profile
    int min_vertices = 0;
    int max_vertices = 0;  // 0 -> per-level default (m + 1)
    bool allow_large = false;
};

// Scans m = 1..max_edges ascending; for each m enumerates one representative
// per isomorphism class and asks has_good_colouring. The first m admitting
// an arrowing graph is returned as an exact record whose witness is the
// first arrowing graph in canonical enumeration order; otherwise a
// lower_bound_only record with lo = max_edges + 1. Results are independent
// of the worker count.
SearchRecord minimum_arrowing_size(const TargetPattern& target, int n, const SearchOptions& opt);

// Full arrowing re-verification of an exact record's witness (edge count,
// connectivity, and the arrowing property when within the engine guard).
void verify_record(const SearchRecord& record);

} // namespace ramsey
