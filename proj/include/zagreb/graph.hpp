#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zagreb {

// Vertices are bits in a 64-bit word: bit i <=> vertex i.
using VertexSet = std::uint64_t;

inline int popcount(VertexSet s) { return std::popcount(s); }
inline VertexSet bit(int v) { return VertexSet{1} << v; }

// Simple undirected graph on at most 64 vertices, one neighbor bitset per
// vertex.  No self-loops, no multi-edges (duplicate add_edge calls collapse).
// Treat instances as immutable values once built; everything here is
// self-contained state, so sharing across threads is safe.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
        if (n < 1 || n > kMaxOrder)
            throw std::invalid_argument("graph order must be in [1, 64], got " +
                                        std::to_string(n));
    }

    int order() const { return n_; }

    // All n bits set.
    VertexSet vertex_mask() const {
        return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
    }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loops are not allowed");
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<std::uint64_t> adj_;
};

// Min/max degree and edge count in one pass.
struct DegreeProfile {
    std::vector<int> degrees;
    int delta = 0;  // minimum degree
    int Delta = 0;  // maximum degree
    int e = 0;      // edge count
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);
DegreeProfile degree_profile(const Graph& g);

// Connectivity via bitset BFS from vertex 0.
bool is_connected(const Graph& g);

// graph6 codec, orders 1..62.  One record per line; decode tolerates an
// optional ">>graph6<<" prefix and rejects anything else that deviates from
// the format (bad length byte, chars outside 63..126, truncated or trailing
// data, nonzero padding bits).
Graph decode_graph6(std::string_view record);
std::string encode_graph6(const Graph& g);

// Exhaustive labeled enumeration for n <= 7.  Every graph on vertex set
// {0..n-1} appears exactly once; `mask` packs the upper triangle in column
// order (0,1),(0,2),(1,2),(0,3),... with pair k at bit k.
std::uint64_t labeled_graph_count(int n);  // 2^C(n,2)
Graph graph_from_mask(int n, std::uint64_t mask);

inline int pair_bit_index(int i, int j) {  // requires i < j
    return j * (j - 1) / 2 + i;
}

template <typename Fn>
void for_each_labeled(int n, bool connected_only, Fn&& fn) {
    const std::uint64_t total = labeled_graph_count(n);  // validates n
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (connected_only && !is_connected(g)) continue;
        fn(g);
    }
}

}  // namespace zagreb
