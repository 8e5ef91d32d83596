#include "ramsey/constructions.hpp"

#include <stdexcept>

namespace ramsey {
namespace {

// K33 with the edge between the first vertices of the two sides deleted,
// sides {0,1,2} and {3,4,5}.
void append_k33_minus_e(std::vector<Edge>& edges, int base) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == 0 && j == 0) continue;
            edges.push_back(Edge{base + i, base + 3 + j});
        }
}

void append_cycle(std::vector<Edge>& edges, int base, int k) {
    for (int i = 0; i + 1 < k; ++i) edges.push_back(Edge{base + i, base + i + 1});
    edges.push_back(Edge{base, base + k - 1});
}

void append_path(std::vector<Edge>& edges, int base, int m) {
    for (int i = 0; i + 1 < m; ++i) edges.push_back(Edge{base + i, base + i + 1});
}

} // namespace

ConstructionFamily construction_from_string(const std::string& name, int n) {
    ConstructionFamily fam;
    fam.n = n;
    if (name == "p3-chain" || name == "p3_chain")
        fam.kind = ConstructionFamily::Kind::p3_chain;
    else if (name == "c4-chain" || name == "c4_chain")
        fam.kind = ConstructionFamily::Kind::c4_chain;
    else if (name == "c3-chain" || name == "c3_chain")
        fam.kind = ConstructionFamily::Kind::c3_chain;
    else
        throw std::invalid_argument("unknown construction family '" + name + "'");
    return fam;
}

std::string construction_name(ConstructionFamily::Kind kind) {
    switch (kind) {
    case ConstructionFamily::Kind::p3_chain: return "p3-chain";
    case ConstructionFamily::Kind::c4_chain: return "c4-chain";
    case ConstructionFamily::Kind::c3_chain: return "c3-chain";
    }
    return "?";
}

TargetPattern construction_target(ConstructionFamily::Kind kind) {
    switch (kind) {
    case ConstructionFamily::Kind::p3_chain: return TargetPattern::path(3);
    case ConstructionFamily::Kind::c4_chain: return TargetPattern::cycle(4);
    case ConstructionFamily::Kind::c3_chain: return TargetPattern::cycle(3);
    }
    throw std::logic_error("construction_target: bad kind");
}

Graph build_construction(const ConstructionFamily& fam) {
    if (fam.n < 1) throw std::invalid_argument("build_construction: n must be positive");
    int n = fam.n;
    std::vector<Edge> edges;
    std::vector<int> component_first; // first vertex of each block component
    int at = 0;

    switch (fam.kind) {
    case ConstructionFamily::Kind::p3_chain:
        for (int c = 0; c < n / 2; ++c) {
            component_first.push_back(at);
            append_cycle(edges, at, 4);
            at += 4;
        }
        if (n % 2 == 1) {
            component_first.push_back(at);
            append_path(edges, at, 3);
            at += 3;
        }
        break;
    case ConstructionFamily::Kind::c4_chain:
        for (int c = 0; c < n / 2; ++c) {
            component_first.push_back(at);
            append_k33_minus_e(edges, at);
            at += 6;
        }
        if (n % 2 == 1) {
            component_first.push_back(at);
            append_cycle(edges, at, 4);
            at += 4;
        }
        break;
    case ConstructionFamily::Kind::c3_chain:
        for (int c = 0; c < n; ++c) {
            component_first.push_back(at);
            append_cycle(edges, at, 3);
            at += 3;
        }
        break;
    }

    for (std::size_t c = 0; c + 1 < component_first.size(); ++c)
        edges.push_back(Edge{component_first[c], component_first[c + 1]});
    return Graph(at, std::move(edges));
}

int path_matching_bound(int m, int n) {
    if (m < 3) throw std::invalid_argument("path_matching_bound: m must be at least 3");
    if (n < 1) throw std::invalid_argument("path_matching_bound: n must be positive");
    if (n % 2 == 0) return n * (m + 2) / 2 - 1;
    return (n + 1) * (m + 2) / 2 - 3;
}

int upper_bound_formula(const TargetPattern& target, int n) {
    if (n < 1) throw std::invalid_argument("upper_bound_formula: n must be positive");
    if (target.kind == TargetPattern::Kind::path) {
        if (target.order == 3) return (5 * n - 1) / 2;
        return path_matching_bound(target.order, n);
    }
    if (target.order == 3) return 4 * n - 1;
    if (target.order == 4) return (9 * n - 1) / 2;
    throw std::invalid_argument("upper_bound_formula: no formula for " + target_to_string(target));
}

} // namespace ramsey
