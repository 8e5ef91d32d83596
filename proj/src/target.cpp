#include "ramsey/target.hpp"

#include <cctype>
#include <stdexcept>

namespace ramsey {

TargetPattern TargetPattern::path(int m) {
    if (m < 2) throw std::invalid_argument("TargetPattern: path needs at least 2 vertices");
    return TargetPattern{Kind::path, m};
}

TargetPattern TargetPattern::cycle(int k) {
    if (k < 3) throw std::invalid_argument("TargetPattern: cycle needs at least 3 vertices");
    return TargetPattern{Kind::cycle, k};
}

std::string target_to_string(const TargetPattern& t) {
    return (t.kind == TargetPattern::Kind::path ? "P" : "C") + std::to_string(t.order);
}

TargetPattern target_from_string(const std::string& s) {
    if (s.size() < 2)
        throw std::invalid_argument("target: expected P<m> or C<k>, got '" + s + "'");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    int order = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("target: expected P<m> or C<k>, got '" + s + "'");
        order = order * 10 + (s[i] - '0');
        if (order > 64) throw std::invalid_argument("target: order exceeds 64");
    }
    if (c == 'P') return TargetPattern::path(order);
    if (c == 'C') return TargetPattern::cycle(order);
    throw std::invalid_argument("target: expected P<m> or C<k>, got '" + s + "'");
}

} // namespace ramsey
