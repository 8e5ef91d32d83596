#pragma once

#include "ramsey/arrowing.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

#include <optional>

namespace ramsey {

// Constructive non-arrowing search for h in {P3, C3}: recursively applies
// the decomposition colouring strategies (component and bridge splits,
// end-cut peeling, cycle patterns, red stars, blue non-triangle edges) and
// returns a colouring only after verify_colouring confirms it is good.
// Inconclusive (nullopt) never means the graph arrows.
std::optional<EdgeColouring> heuristic_refuter(const Graph& g, int n, const TargetPattern& h);

} // namespace ramsey
