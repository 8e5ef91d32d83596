#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

#include <string>

namespace ramsey {

// Families of connected graphs realizing the upper bounds:
//   p3_chain: C4 blocks (plus one P3 when n is odd) joined by bridges,
//             floor((5n-1)/2) edges, target (nK2, P3);
//   c4_chain: K33-e blocks (plus one C4 when n is odd) joined by bridges,
//             floor((9n-1)/2) edges, target (nK2, C4);
//   c3_chain: n triangles joined by n-1 bridges, 4n-1 edges, target (nK2, C3).
struct ConstructionFamily {
    enum class Kind { p3_chain, c4_chain, c3_chain };
    Kind kind;
    int n = 1;
};

ConstructionFamily construction_from_string(const std::string& name, int n);
std::string construction_name(ConstructionFamily::Kind kind);

// The chained construction graph. Each bridge joins the lexicographically
// first vertex of consecutive components; components occupy consecutive
// vertex ranges with the odd leftover block (P3 / C4) last.
Graph build_construction(const ConstructionFamily& fam);

// The blue target the family is built against.
TargetPattern construction_target(ConstructionFamily::Kind kind);

// Closed-form bound on the connected size Ramsey number of (nK2, target):
// paths P_m via the general matching-vs-path bound (exact at m = 3), C3 via
// 4n-1 (exact), C4 via floor((9n-1)/2) (upper bound). Only P_m, C3, C4 have
// known formulas; other targets throw.
int upper_bound_formula(const TargetPattern& target, int n);

// General matching-vs-path bound: n(m+2)/2 - 1 for even n,
// (n+1)(m+2)/2 - 3 for odd n. Requires m >= 3.
int path_matching_bound(int m, int n);

} // namespace ramsey
