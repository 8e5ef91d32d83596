#include "ramsey/search.hpp"

#include "ramsey/cache.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph6.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

using namespace ramsey;

namespace {

const TargetPattern P3 = TargetPattern::path(3);
const TargetPattern C3 = TargetPattern::cycle(3);
const TargetPattern C4 = TargetPattern::cycle(4);

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("test_tmp_" + name) { std::remove(path.c_str()); }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("minimum_arrowing_size on named instances") {
    SearchOptions opt;
    opt.max_edges = 8;

    SearchRecord r = minimum_arrowing_size(P3, 1, opt);
    CHECK(r.status == SearchRecord::Status::exact);
    CHECK(r.value() == 2);
    REQUIRE(r.witness.has_value());
    CHECK(canonical_form(graph6_decode(*r.witness)) == canonical_form(path_graph(3)));

    r = minimum_arrowing_size(C3, 1, opt);
    CHECK(r.value() == 3);
    CHECK(canonical_form(graph6_decode(*r.witness)) == canonical_form(cycle_graph(3)));

    r = minimum_arrowing_size(P3, 2, opt);
    CHECK(r.value() == 4);
    CHECK(canonical_form(graph6_decode(*r.witness)) == canonical_form(cycle_graph(4)));

    r = minimum_arrowing_size(C4, 1, opt);
    CHECK(r.value() == 4);
    CHECK(canonical_form(graph6_decode(*r.witness)) == canonical_form(cycle_graph(4)));

    verify_record(r); // witness re-verification accepts real records
}

TEST_CASE("lower bound record when nothing arrows") {
    SearchOptions opt;
    opt.max_edges = 4;
    SearchRecord r = minimum_arrowing_size(C3, 2, opt); // true value is 7
    CHECK(r.status == SearchRecord::Status::lower_bound_only);
    CHECK(r.lo == 5);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.graphs_examined == 1 + 1 + 3 + 5);
}

TEST_CASE("search is deterministic across worker counts") {
    SearchOptions serial;
    serial.max_edges = 7;
    SearchOptions parallel = serial;
    parallel.jobs = 4;
    for (const auto& [target, n] : std::vector<std::pair<TargetPattern, int>>{
             {P3, 2}, {P3, 3}, {C3, 2}, {C4, 2}}) {
        SearchRecord a = minimum_arrowing_size(target, n, serial);
        SearchRecord b = minimum_arrowing_size(target, n, parallel);
        CHECK(a.status == b.status);
        CHECK(a.lo == b.lo);
        CHECK(a.hi == b.hi);
        CHECK(a.witness == b.witness);
        CHECK(a.graphs_examined == b.graphs_examined);
    }
}

TEST_CASE("r-hat is at most r-hat-connected") {
    SearchOptions connected;
    connected.max_edges = 6;
    SearchOptions any = connected;
    any.connected_only = false;
    any.max_vertices = 10; // room for disconnected hosts
    for (const auto& [target, n] :
         std::vector<std::pair<TargetPattern, int>>{{P3, 1}, {P3, 2}, {C3, 1}}) {
        SearchRecord rc = minimum_arrowing_size(target, n, connected);
        SearchRecord ra = minimum_arrowing_size(target, n, any);
        REQUIRE(rc.status == SearchRecord::Status::exact);
        REQUIRE(ra.status == SearchRecord::Status::exact);
        CHECK(ra.value() <= rc.value());
    }
    // For (2K2, P3) no disconnected host does better: blue K2 components
    // absorb red matching budget for free, so r-hat equals r-hat-connected.
    SearchRecord ra = minimum_arrowing_size(P3, 2, any);
    CHECK(ra.value() == 4);
}

TEST_CASE("pruned c3 search cross-checks against the full run") {
    // The claims filter is a lower-bound accelerator: a minimal graph
    // arrowing (nK2, C3) with at most 4n-2 edges would satisfy the claims,
    // so an all-fail pruned scan of that region agrees with the full scan.
    // It must not be used to locate the exact value: the true 7-edge
    // witness has cut vertices and is filtered out.
    SearchOptions full;
    full.max_edges = 6; // 4n-2 for n=2
    SearchOptions pruned = full;
    pruned.profile = PruningProfile::c3_minimal_claims;
    pruned.aggressive_prune = true;
    SearchRecord a = minimum_arrowing_size(C3, 2, full);
    SearchRecord b = minimum_arrowing_size(C3, 2, pruned);
    CHECK(a.status == SearchRecord::Status::lower_bound_only);
    CHECK(b.status == SearchRecord::Status::lower_bound_only);
    CHECK(a.lo == 7);
    CHECK(b.lo == 7);
    CHECK(b.graphs_examined <= a.graphs_examined); // it actually prunes

    // Full scan one level further establishes the exact value.
    SearchOptions exact = full;
    exact.max_edges = 7;
    SearchRecord c = minimum_arrowing_size(C3, 2, exact);
    REQUIRE(c.status == SearchRecord::Status::exact);
    CHECK(c.value() == 7);
}

// Skipped by default (about 40 s): the full 13-edge scan confirming the
// conjectured C4 value at n = 3. Run with:
//   ./unit_tests -ns -tc="conjectured C4 value at n=3"
TEST_CASE("conjectured C4 value at n=3" * doctest::skip()) {
    SearchOptions opt;
    opt.max_edges = 13;
    opt.allow_large = true;
    opt.jobs = 2;
    SearchRecord rec = minimum_arrowing_size(C4, 3, opt);
    REQUIRE(rec.status == SearchRecord::Status::exact);
    CHECK(rec.value() == 13);
    CHECK(rec.graphs_examined == 41936);
    verify_record(rec);
}

TEST_CASE("cache round trip, supersede, and integrity") {
    TempFile tmp("cache.json");

    CHECK(cache_load(tmp.path).empty()); // missing file -> empty table

    SearchOptions opt;
    opt.max_edges = 5;
    SearchRecord rec = minimum_arrowing_size(P3, 2, opt);
    cache_store(tmp.path, rec);
    auto table = cache_load(tmp.path);
    REQUIRE(table.size() == 1);
    CHECK(table[0].target == P3);
    CHECK(table[0].n == 2);
    CHECK(table[0].lo == rec.lo);
    CHECK(table[0].witness == rec.witness);
    CHECK(table[0].graphs_examined == rec.graphs_examined);

    // Supersede on the same key.
    SearchRecord again = rec;
    again.wall_time_ms = 999;
    cache_store(tmp.path, again);
    table = cache_load(tmp.path);
    CHECK(table.size() == 1);

    // Another key appends.
    SearchRecord other = minimum_arrowing_size(C3, 1, opt);
    cache_store(tmp.path, other);
    table = cache_load(tmp.path);
    CHECK(table.size() == 2);
    CHECK(cache_find(table, C3, 1, true) != nullptr);
    CHECK(cache_find(table, C3, 2, true) == nullptr);
}

TEST_CASE("cache rejects conflicting duplicates") {
    TempFile tmp("cache_conflict.json");
    std::ofstream out(tmp.path);
    out << R"({"version":1,"records":[
      {"target":"P3","n":1,"connected_only":true,"status":"exact","lo":2,"hi":2,"witness":"Bo"},
      {"target":"P3","n":1,"connected_only":true,"status":"exact","lo":3,"hi":3,"witness":"Bw"}
    ]})";
    out.close();
    CHECK_THROWS_AS(cache_load(tmp.path), cache_error);
}

TEST_CASE("cache parse errors name the line") {
    TempFile tmp("cache_bad.json");
    std::ofstream out(tmp.path);
    out << "{\n\"records\": [\n{ not json\n]\n}\n";
    out.close();
    try {
        cache_load(tmp.path);
        FAIL("expected cache_error");
    } catch (const cache_error& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("cache rejects broken witnesses and missing fields") {
    TempFile tmp("cache_field.json");
    {
        std::ofstream out(tmp.path);
        out << R"({"version":1,"records":[{"target":"P3","n":1,"connected_only":true,"status":"exact","lo":2}]})";
    }
    try {
        cache_load(tmp.path);
        FAIL("expected cache_error");
    } catch (const cache_error& e) {
        CHECK(std::string(e.what()).find("hi") != std::string::npos); // names the field
    }
    {
        std::ofstream out(tmp.path);
        // witness C4 has 4 edges, claimed value is 3
        out << R"({"version":1,"records":[{"target":"P3","n":2,"connected_only":true,"status":"exact","lo":3,"hi":3,"witness":"Cl"}]})";
    }
    CHECK_THROWS_AS(cache_load(tmp.path), cache_error);
}
