#include "ramsey/cli.hpp"

#include "ramsey/arrowing.hpp"
#include "ramsey/cache.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/refuter.hpp"
#include "ramsey/report.hpp"
#include "ramsey/search.hpp"
#include "ramsey/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace ramsey {
namespace {

constexpr const char* kDefaultCacheFile = "ramsey-cache.json";

std::string resolve_cache_path(const std::string& flag_value, bool no_cache) {
    if (no_cache) return "";
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("RAMSEY_CACHE"); env != nullptr && *env != '\0') return env;
    return kDefaultCacheFile;
}

void print_witness(const EdgeColouring& c, std::ostream& out) {
    for (int e = 0; e < c.host.edge_count(); ++e) {
        const Edge& ed = c.host.edge(e);
        out << ed.u << "-" << ed.v << ":" << (c.blue.test(e) ? "blue" : "red") << "\n";
    }
}

void print_record(const SearchRecord& rec, std::ostream& out) {
    out << "target=" << target_to_string(rec.target) << " n=" << rec.n
        << " connected=" << (rec.connected_only ? "yes" : "no") << "\n";
    out << "status=" << search_status_name(rec.status);
    if (rec.status == SearchRecord::Status::exact)
        out << " value=" << rec.value();
    else if (rec.status == SearchRecord::Status::lower_bound_only)
        out << " lo=" << rec.lo;
    else
        out << " hi=" << rec.hi;
    out << "\n";
    if (rec.witness) out << "witness=" << *rec.witness << "\n";
    out << "graphs-examined=" << rec.graphs_examined << "\n";
}

struct ArrowsArgs {
    int n = 1;
    std::string target;
    std::string graph;
    bool oracle = false;
    bool refute_first = false;
};

int run_arrows(const ArrowsArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string g6 = a.graph;
    if (g6.empty()) {
        if (!std::getline(in, g6) || g6.empty()) {
            err << "error: no graph given (pass --graph or pipe a graph6 line)\n";
            return 2;
        }
    }
    Graph g = graph6_decode(g6);
    TargetPattern target = target_from_string(a.target);

    if (a.refute_first &&
        ((target.kind == TargetPattern::Kind::path && target.order == 3) ||
         (target.kind == TargetPattern::Kind::cycle && target.order == 3))) {
        if (auto colouring = heuristic_refuter(g, a.n, target)) {
            out << "no-arrow (refuter)\n";
            print_witness(*colouring, out);
            return 1;
        }
        err << "refuter inconclusive; running exhaustive search\n";
    }

    ArrowingVerdict verdict = has_good_colouring(g, a.n, target);
    if (a.oracle && g.edge_count() <= 18) {
        ArrowingVerdict reference = naive_arrowing_oracle(g, a.n, target);
        if (reference.arrows != verdict.arrows) {
            err << "error: oracle mismatch (engine=" << (verdict.arrows ? "arrows" : "no-arrow")
                << ", oracle=" << (reference.arrows ? "arrows" : "no-arrow") << ")\n";
            return 2;
        }
        err << "oracle agreed\n";
    }
    err << "nodes=" << verdict.stats.nodes
        << " maximal-sets=" << verdict.stats.maximal_sets_examined << "\n";
    if (verdict.arrows) {
        out << "arrows\n";
        return 0;
    }
    out << "no-arrow\n";
    print_witness(*verdict.witness, out);
    return 1;
}

struct SearchArgs {
    int n = 1;
    std::string target;
    int max_edges = 13;
    bool any_host = false; // connected_only = false
    std::string prune = "none";
    int jobs = 1;
    std::string cache;
    bool no_cache = false;
    bool force_large = false;
    int max_vertices = 0;
};

int run_search_min(const SearchArgs& a, std::ostream& out, std::ostream& err) {
    TargetPattern target = target_from_string(a.target);
    SearchOptions opt;
    opt.max_edges = a.max_edges;
    opt.jobs = a.jobs;
    opt.connected_only = !a.any_host;
    opt.max_vertices = a.max_vertices;
    opt.allow_large = a.force_large;
    if (a.prune == "none") {
        opt.profile = PruningProfile::none;
    } else if (a.prune == "c3-claims") {
        opt.profile = PruningProfile::c3_minimal_claims;
    } else if (a.prune == "c3-claims-aggressive") {
        opt.profile = PruningProfile::c3_minimal_claims;
        opt.aggressive_prune = true;
    } else {
        err << "error: unknown pruning profile '" << a.prune << "'\n";
        return 2;
    }

    SearchRecord rec = minimum_arrowing_size(target, a.n, opt);
    print_record(rec, out);
    err << "wall-time-ms=" << rec.wall_time_ms << "\n";

    std::string cache_path = resolve_cache_path(a.cache, a.no_cache);
    if (opt.profile != PruningProfile::none) {
        // A pruned scan can skip the true minimum, so its records are
        // advisory and never cached as exact values.
        err << "pruned run: result not cached\n";
    } else if (!cache_path.empty()) {
        cache_store(cache_path, rec);
        err << "cache updated: " << cache_path << "\n";
    }
    return 0;
}

struct ConstructArgs {
    int n = 1;
    std::string family;
    bool verify = false;
};

int run_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    ConstructionFamily fam = construction_from_string(a.family, a.n);
    Graph g = build_construction(fam);
    out << graph6_encode(g) << "\n";
    if (a.verify) {
        TargetPattern target = construction_target(fam.kind);
        int expected = upper_bound_formula(target, fam.n);
        bool edges_ok = g.edge_count() == expected;
        bool connected = is_connected(g);
        out << "edges=" << g.edge_count() << " expected=" << expected
            << (edges_ok ? " ok" : " MISMATCH") << "\n";
        out << "connected=" << (connected ? "yes" : "NO") << "\n";
        if (g.edge_count() <= 18) {
            bool arrows = has_good_colouring(g, fam.n, target).arrows;
            out << "arrows=" << (arrows ? "yes" : "NO") << "\n";
            if (!arrows) return 2;
        } else {
            err << "arrowing check skipped (" << g.edge_count() << " edges exceed the guard)\n";
        }
        if (!edges_ok || !connected) return 2;
    }
    return 0;
}

struct TableArgs {
    std::string target;
    int n_from = 1;
    int n_to = 4;
    std::string format = "md";
    std::string cache;
    bool no_cache = false;
    int compute_limit = 9;
    int jobs = 1;
};

int run_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
    TargetPattern target = target_from_string(a.target);
    if (a.n_from < 1 || a.n_to < a.n_from) {
        err << "error: bad n range\n";
        return 2;
    }
    bool conjectural = target.kind == TargetPattern::Kind::cycle && target.order == 4;

    std::string cache_path = resolve_cache_path(a.cache, a.no_cache);
    std::vector<SearchRecord> table;
    if (!cache_path.empty()) table = cache_load(cache_path);

    TableReport report;
    report.target = target_to_string(target);
    report.query = "table " + report.target + " n=" + std::to_string(a.n_from) + ".." +
                   std::to_string(a.n_to);

    for (int n = a.n_from; n <= a.n_to; ++n) {
        TableRow row;
        row.n = n;
        row.formula = upper_bound_formula(target, n);
        const SearchRecord* cached = cache_find(table, target, n, true);
        if (cached != nullptr && cached->status == SearchRecord::Status::exact) {
            row.has_value = true;
            row.value = cached->value();
            row.status = "exact (cached)";
        } else if (row.formula <= a.compute_limit) {
            SearchOptions opt;
            opt.max_edges = row.formula; // the construction guarantees a hit by here
            opt.jobs = a.jobs;
            SearchRecord rec = minimum_arrowing_size(target, n, opt);
            if (rec.status == SearchRecord::Status::exact) {
                row.has_value = true;
                row.value = rec.value();
                row.status = "exact (computed)";
                if (!cache_path.empty()) {
                    cache_store(cache_path, rec);
                    table = cache_load(cache_path);
                }
            } else {
                row.status = "lower bound " + std::to_string(rec.lo);
            }
        } else {
            row.status = "bound only";
            row.note = "exact search above compute limit";
        }
        if (row.has_value) {
            if (conjectural)
                row.note = row.value == row.formula ? "conjecture confirmed at this n"
                                                    : "BELOW conjectured value";
            else
                row.note = row.value == row.formula ? "matches formula" : "MISMATCH vs formula";
        }
        report.rows.push_back(std::move(row));
    }

    if (a.format == "md")
        render_markdown(report, out);
    else if (a.format == "csv")
        render_csv(report, out);
    else if (a.format == "json")
        render_json(report, out);
    else {
        err << "error: unknown format '" << a.format << "'\n";
        return 2;
    }
    return 0;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"connected size Ramsey number search engine for matchings vs short paths/cycles"};
    app.set_version_flag("--version", std::string(kEngineVersion));
    app.require_subcommand(1);

    ArrowsArgs arrows_args;
    auto* arrows = app.add_subcommand("arrows", "decide G -> (nK2, H) for one graph");
    arrows->add_option("--n", arrows_args.n, "matching size n")->required();
    arrows->add_option("--target", arrows_args.target, "blue target (P<m> or C<k>)")->required();
    arrows->add_option("--graph", arrows_args.graph, "graph6 string (default: first stdin line)");
    arrows->add_flag("--oracle", arrows_args.oracle, "cross-check with the brute-force oracle");
    arrows->add_flag("--refute-first", arrows_args.refute_first,
                     "try the constructive refuter before exhaustive search (P3/C3)");

    SearchArgs search_args;
    auto* search = app.add_subcommand("search-min", "minimum edges of a host that arrows");
    search->add_option("--n", search_args.n, "matching size n")->required();
    search->add_option("--target", search_args.target, "blue target (P<m> or C<k>)")->required();
    search->add_option("--max-edges", search_args.max_edges, "largest edge count to scan");
    search->add_flag("--any", search_args.any_host, "drop the connectivity requirement");
    search->add_option("--prune", search_args.prune,
                       "enumeration filter: none | c3-claims | c3-claims-aggressive");
    search->add_option("--jobs", search_args.jobs, "worker threads")->check(CLI::Range(1, 64));
    search->add_option("--cache", search_args.cache, "results cache file");
    search->add_flag("--no-cache", search_args.no_cache, "skip cache updates");
    search->add_flag("--force-large", search_args.force_large,
                     "override the 13-edge enumeration guard");
    search->add_option("--max-vertices", search_args.max_vertices,
                       "override the per-level vertex bound");

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "emit an upper-bound construction");
    construct->add_option("--family", construct_args.family,
                          "p3-chain | c4-chain | c3-chain")->required();
    construct->add_option("--n", construct_args.n, "matching size n")->required();
    construct->add_flag("--verify", construct_args.verify,
                        "check edge count, connectivity, and (small cases) arrowing");

    TableArgs table_args;
    auto* tbl = app.add_subcommand("table", "values vs formula over a range of n");
    tbl->add_option("--target", table_args.target, "blue target (P<m> or C<k>)")->required();
    tbl->add_option("--n-from", table_args.n_from, "first n");
    tbl->add_option("--n-to", table_args.n_to, "last n");
    tbl->add_option("--format", table_args.format, "md | csv | json");
    tbl->add_option("--cache", table_args.cache, "results cache file");
    tbl->add_flag("--no-cache", table_args.no_cache, "skip the cache entirely");
    tbl->add_option("--compute-limit", table_args.compute_limit,
                    "compute missing values exactly when the formula is at most this");
    tbl->add_option("--jobs", table_args.jobs, "worker threads")->check(CLI::Range(1, 64));

    std::vector<const char*> argv;
    argv.push_back("ramsey");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kEngineVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (arrows->parsed()) return run_arrows(arrows_args, in, out, err);
        if (search->parsed()) return run_search_min(search_args, out, err);
        if (construct->parsed()) return run_construct(construct_args, out, err);
        if (tbl->parsed()) return run_table(table_args, out, err);
    } catch (const graph6_parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const instance_too_large& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const cache_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace ramsey
