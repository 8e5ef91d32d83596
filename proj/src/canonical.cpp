#include "ramsey/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <tuple>

namespace ramsey {
namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement of an ordered partition. Every vertex is re-signed by
// (its cell index, neighbour counts per cell in order) until the partition
// stops splitting. Signatures reference only cell structure, never original
// labels, so the refined partition is relabeling-invariant.
void refine(const std::vector<std::uint64_t>& adj, Cells& cells) {
    for (;;) {
        std::vector<std::uint64_t> cell_mask(cells.size(), 0);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) cell_mask[c] |= std::uint64_t{1} << v;

        Cells next;
        bool split = false;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() == 1) {
                next.push_back(cells[c]);
                continue;
            }
            // Group the cell by neighbour-count signature.
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(cells[c].size());
            for (int v : cells[c]) {
                std::vector<int> key(cells.size());
                for (std::size_t t = 0; t < cells.size(); ++t)
                    key[t] = std::popcount(adj[v] & cell_mask[t]);
                keyed.emplace_back(std::move(key), v);
            }
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<int> group{keyed[0].second};
            for (std::size_t i = 1; i < keyed.size(); ++i) {
                if (keyed[i].first != keyed[i - 1].first) {
                    next.push_back(std::move(group));
                    group.clear();
                    split = true;
                }
                group.push_back(keyed[i].second);
            }
            next.push_back(std::move(group));
        }
        cells = std::move(next);
        if (!split) return;
    }
}

// Transposing u and v is an automorphism iff their neighbourhoods agree away
// from the pair. Branching on one representative per twin class is then
// enough: twin branches explore identical encodings.
bool are_twins(const std::vector<std::uint64_t>& adj, int u, int v) {
    std::uint64_t exclude = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    return (adj[u] & exclude) == (adj[v] & exclude);
}

struct CanonSearch {
    int n;
    const std::vector<std::uint64_t>& adj;
    std::vector<char> best_bits;
    std::vector<int> best_label;
    bool have_best = false;

    CanonSearch(int n_, const std::vector<std::uint64_t>& a) : n(n_), adj(a) {}

    // Bits for pairs among the first `upto` labeled vertices, column-major:
    // (0,1), (0,2), (1,2), (0,3), ... Column j completes once labels 0..j
    // are fixed, so fixing a prefix of positions determines a contiguous
    // prefix of the encoding.
    std::vector<char> prefix_bits(const std::vector<int>& label, int upto) const {
        std::vector<char> bits;
        bits.reserve(static_cast<std::size_t>(upto) * (upto - 1) / 2);
        for (int j = 1; j < upto; ++j)
            for (int i = 0; i < j; ++i)
                bits.push_back(static_cast<char>((adj[label[i]] >> label[j]) & 1u));
        return bits;
    }

    void run(Cells cells) {
        refine(adj, cells);

        std::vector<int> label;
        std::size_t t = 0;
        while (t < cells.size() && cells[t].size() == 1) {
            label.push_back(cells[t][0]);
            ++t;
        }

        if (have_best) {
            auto prefix = prefix_bits(label, static_cast<int>(label.size()));
            if (std::lexicographical_compare(best_bits.begin(),
                                             best_bits.begin() + prefix.size(),
                                             prefix.begin(), prefix.end()))
                return; // prefix already beats this branch
        }

        if (t == cells.size()) {
            auto bits = prefix_bits(label, n);
            if (!have_best || bits < best_bits) {
                best_bits = std::move(bits);
                best_label = label;
                have_best = true;
            }
            return;
        }

        const std::vector<int>& cell = cells[t];
        std::vector<int> reps;
        for (int v : cell) {
            bool dup = false;
            for (int r : reps)
                if (are_twins(adj, r, v)) {
                    dup = true;
                    break;
                }
            if (!dup) reps.push_back(v);
        }
        for (int v : reps) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < t; ++c) child.push_back(cells[c]);
            child.push_back({v});
            std::vector<int> rest;
            for (int w : cell)
                if (w != v) rest.push_back(w);
            child.push_back(std::move(rest));
            for (std::size_t c = t + 1; c < cells.size(); ++c) child.push_back(cells[c]);
            run(std::move(child));
        }
    }
};

struct ComponentCanon {
    int order = 0;
    std::vector<char> bits;            // upper-triangle bits, column-major
    std::vector<int> global_vertices;  // position -> original vertex of g
};

ComponentCanon canonicalize_component(const Graph& g, std::uint64_t comp_mask) {
    ComponentCanon out;
    std::vector<int> locals;
    std::uint64_t m = comp_mask;
    while (m != 0) {
        int v = std::countr_zero(m);
        m &= m - 1;
        locals.push_back(v);
    }
    int c = static_cast<int>(locals.size());
    out.order = c;
    if (c == 1) {
        out.global_vertices = locals;
        return out;
    }

    std::vector<int> local_index(g.vertex_count(), -1);
    for (int i = 0; i < c; ++i) local_index[locals[i]] = i;
    std::vector<std::uint64_t> adj(c, 0);
    for (int i = 0; i < c; ++i) {
        std::uint64_t nb = g.neighbours(locals[i]) & comp_mask;
        while (nb != 0) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            adj[i] |= std::uint64_t{1} << local_index[w];
        }
    }

    CanonSearch search(c, adj);
    Cells initial(1);
    for (int i = 0; i < c; ++i) initial[0].push_back(i);
    search.run(std::move(initial));
    assert(search.have_best);

    out.bits = std::move(search.best_bits);
    out.global_vertices.resize(c);
    for (int pos = 0; pos < c; ++pos)
        out.global_vertices[pos] = locals[search.best_label[pos]];
    return out;
}

std::string pack_bits(const std::vector<char>& bits) {
    std::string bytes((bits.size() + 7) / 8, '\0');
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) bytes[i / 8] |= static_cast<char>(0x80 >> (i % 8));
    return bytes;
}

struct CanonResult {
    std::string form;
    std::vector<int> final_label; // original vertex -> canonical vertex
};

CanonResult canonicalize(const Graph& g) {
    auto comps = components(g);
    std::vector<ComponentCanon> parts;
    parts.reserve(comps.size());
    for (auto mask : comps) parts.push_back(canonicalize_component(g, mask));
    std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return std::tie(a.order, a.bits) < std::tie(b.order, b.bits);
    });

    CanonResult res;
    res.form.push_back(static_cast<char>(g.vertex_count()));
    res.form.push_back(static_cast<char>(parts.size()));
    res.final_label.assign(g.vertex_count(), -1);
    int offset = 0;
    for (const auto& part : parts) {
        res.form.push_back(static_cast<char>(part.order));
        res.form += pack_bits(part.bits);
        for (int pos = 0; pos < part.order; ++pos)
            res.final_label[part.global_vertices[pos]] = offset + pos;
        offset += part.order;
    }
    return res;
}

} // namespace

std::string canonical_form(const Graph& g) { return canonicalize(g).form; }

Graph canonical_graph(const Graph& g) { return relabel(g, canonicalize(g).final_label); }

Graph graph_from_canonical(const std::string& bytes) {
    std::size_t at = 0;
    auto need = [&](std::size_t k) {
        if (at + k > bytes.size())
            throw std::invalid_argument("graph_from_canonical: truncated encoding");
    };
    need(2);
    int total = static_cast<unsigned char>(bytes[at++]);
    int ncomp = static_cast<unsigned char>(bytes[at++]);
    std::vector<Edge> edges;
    int offset = 0;
    for (int c = 0; c < ncomp; ++c) {
        need(1);
        int order = static_cast<unsigned char>(bytes[at++]);
        std::size_t nbits = static_cast<std::size_t>(order) * (order - 1) / 2;
        std::size_t nbytes = (nbits + 7) / 8;
        need(nbytes);
        std::size_t bit = 0;
        for (int j = 1; j < order; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (bytes[at + bit / 8] & (0x80 >> (bit % 8)))
                    edges.push_back(Edge{offset + i, offset + j});
        at += nbytes;
        offset += order;
    }
    if (offset != total)
        throw std::invalid_argument("graph_from_canonical: component orders disagree with total");
    return Graph(total, std::move(edges));
}

} // namespace ramsey
