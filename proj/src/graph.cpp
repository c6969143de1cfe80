#include "zagreb/graph.hpp"

#include <algorithm>

namespace zagreb {

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees.reserve(g.order());
    int twice = 0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        p.degrees.push_back(d);
        twice += d;
    }
    p.delta = *std::min_element(p.degrees.begin(), p.degrees.end());
    p.Delta = *std::max_element(p.degrees.begin(), p.degrees.end());
    p.e = twice / 2;
    return p;
}

bool is_connected(const Graph& g) {
    VertexSet reached = 1, frontier = 1;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f;) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~reached;
        reached |= frontier;
    }
    return reached == g.vertex_mask();
}

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph decode_graph6(std::string_view record) {
    if (record.substr(0, kHeader.size()) == kHeader)
        record.remove_prefix(kHeader.size());
    if (record.empty())
        throw std::invalid_argument("graph6: empty record");
    for (char c : record)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: character out of range 63..126");

    const unsigned char size_byte = static_cast<unsigned char>(record[0]);
    if (size_byte == 126)
        throw std::invalid_argument("graph6: orders above 62 are not supported");
    const int n = size_byte - 63;
    if (n < 1)
        throw std::invalid_argument("graph6: order 0 is not supported");

    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(record.size()) < 1 + nbytes)
        throw std::invalid_argument("graph6: record truncated");
    if (static_cast<int>(record.size()) > 1 + nbytes)
        throw std::invalid_argument("graph6: trailing characters after record");

    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int val = record[1 + k / 6] - 63;
            if ((val >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Unused low bits of the final byte must be zero.
    if (nbits % 6 != 0) {
        int val = record[1 + nbytes - 1] - 63;
        int pad = 6 - nbits % 6;
        if (val & ((1 << pad) - 1))
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62)
        throw std::invalid_argument("graph6: orders above 62 are not supported");
    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;
    std::string out(static_cast<std::size_t>(1 + nbytes), char(63));
    out[0] = static_cast<char>(63 + n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (g.has_edge(i, j))
                out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
        }
    }
    return out;
}

std::uint64_t labeled_graph_count(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("labeled enumeration supports n in [1, 7]");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace zagreb
