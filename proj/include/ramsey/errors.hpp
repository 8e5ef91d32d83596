#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Thrown when a search-guard limit (edge count, enumeration size) is exceeded
// without an explicit override.
struct instance_too_large : std::runtime_error {
    explicit instance_too_large(const std::string& what) : std::runtime_error(what) {}
};

// graph6 parse failure; `offset` is the byte position of the offending input.
struct graph6_parse_error : std::runtime_error {
    std::size_t offset;
    graph6_parse_error(std::size_t off, const std::string& what)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// Results-cache integrity or parse failure.
struct cache_error : std::runtime_error {
    explicit cache_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ramsey
