#pragma once

#include "ramsey/graph.hpp"

#include <string>

namespace ramsey {

// Standard short-form graph6: order byte n+63 (n <= 62), then the
// column-major upper-triangle bits packed six per byte, each +63.
std::string graph6_encode(const Graph& g);

// Inverse of graph6_encode, label-exact. Accepts an optional ">>graph6<<"
// header and trailing newline. Throws graph6_parse_error with the byte
// offset on malformed input; long-form (n > 62) input is rejected.
Graph graph6_decode(const std::string& s);

} // namespace ramsey
