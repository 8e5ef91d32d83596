#include "ramsey/graph6.hpp"

#include "ramsey/errors.hpp"

#include <stdexcept>

namespace ramsey {

std::string graph6_encode(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62)
        throw std::invalid_argument("graph6_encode: short form supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(const std::string& input) {
    std::string s = input;
    std::size_t base = 0;
    static const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) {
        base = header.size();
        s = s.substr(header.size());
    }
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();

    if (s.empty()) throw graph6_parse_error(base, "empty graph6 string");
    unsigned char first = static_cast<unsigned char>(s[0]);
    if (first == '~')
        throw graph6_parse_error(base, "long-form graph6 (n > 62) not supported");
    if (first < 63 || first > 63 + 62)
        throw graph6_parse_error(base, "invalid graph6 order byte");
    int n = first - 63;
    if (n == 0) throw graph6_parse_error(base, "graph6 order 0 not representable as a Graph");

    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() < 1 + nbytes)
        throw graph6_parse_error(base + s.size(), "graph6 string truncated");
    if (s.size() > 1 + nbytes)
        throw graph6_parse_error(base + 1 + nbytes, "trailing bytes after graph6 data");

    std::vector<Edge> edges;
    std::size_t bit = 0;
    int i = 0, j = 1;
    for (std::size_t k = 0; k < nbytes; ++k) {
        unsigned char raw = static_cast<unsigned char>(s[1 + k]);
        if (raw < 63 || raw > 126)
            throw graph6_parse_error(base + 1 + k, "invalid graph6 data byte");
        int val = raw - 63;
        for (int b = 5; b >= 0 && bit < nbits; --b, ++bit) {
            if ((val >> b) & 1) edges.push_back(Edge{i, j});
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
        // Padding bits beyond nbits must be zero per the format.
        if (bit == nbits) {
            int pad = static_cast<int>(6 * nbytes - nbits);
            if (pad > 0 && (val & ((1 << pad) - 1)) != 0)
                throw graph6_parse_error(base + 1 + k, "nonzero padding bits");
        }
    }
    return Graph(n, std::move(edges));
}

} // namespace ramsey
