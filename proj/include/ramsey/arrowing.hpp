#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/matching.hpp"
#include "ramsey/target.hpp"

#include <cstdint>
#include <optional>

namespace ramsey {

// A red/blue edge colouring of a host graph; blue is stored, red is the
// complement.
struct EdgeColouring {
    Graph host;
    EdgeSet blue;

    EdgeSet red() const { return blue.complement(); }
};

struct SearchStats {
    std::uint64_t nodes = 0;              // DFS decision nodes
    std::uint64_t maximal_sets_examined = 0; // leaves that reached the exact test
};

// Outcome of an arrowing query G -> (nK2, H). If arrows is false, witness
// holds a good colouring: blue H-free, red matching number <= n-1.
struct ArrowingVerdict {
    bool arrows = false;
    std::optional<EdgeColouring> witness;
    SearchStats stats;
};

// Result of classifying one concrete colouring.
struct ColouringCheck {
    enum class Kind { good, red_violation, blue_violation };
    Kind kind = Kind::good;
    std::optional<Matching> red_witness; // a red matching of size n, when red_violation
};

// Classifies c against (nK2, h): red violation (with an n-edge red matching)
// is reported first, then blue violation, else good.
ColouringCheck verify_colouring(const EdgeColouring& c, int n, const TargetPattern& h);

// Decides G -> (nK2, h) by DFS over edges in index order, branching
// blue-first. A good colouring exists iff some maximal h-free blue set B has
// matching_number(G - B) <= n-1, so non-maximal leaves are skipped and a
// branch is pruned as soon as its forced-red edges already hold a matching
// of size n. The witness is the first good colouring in search order.
// Guarded at 30 edges.
ArrowingVerdict has_good_colouring(const Graph& g, int n, const TargetPattern& h);

// Ground-truth oracle: brute force over all 2^|E| colourings, ascending blue
// mask. Guarded at 18 edges.
ArrowingVerdict naive_arrowing_oracle(const Graph& g, int n, const TargetPattern& h);

} // namespace ramsey
