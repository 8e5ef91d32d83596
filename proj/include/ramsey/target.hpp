#pragma once

#include <string>

namespace ramsey {

// The blue target H: a path on m >= 2 vertices or a cycle on k >= 3.
struct TargetPattern {
    enum class Kind { path, cycle };
    Kind kind = Kind::path;
    int order = 3; // number of vertices

    static TargetPattern path(int m);
    static TargetPattern cycle(int k);

    friend bool operator==(const TargetPattern&, const TargetPattern&) = default;
};

// "P3", "C4", ... (case-insensitive on parse).
std::string target_to_string(const TargetPattern& t);
TargetPattern target_from_string(const std::string& s);

} // namespace ramsey
