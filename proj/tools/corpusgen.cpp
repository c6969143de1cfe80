// Builds the isomorphism-reduced graph6 corpora shipped in data/ by growing
// canonical graph classes one vertex at a time.  Every graph on n vertices is
// some (n-1)-vertex graph plus one new vertex, so extending each class by all
// possible neighborhoods and deduplicating on a canonical form enumerates all
// classes; for connected corpora it suffices to extend connected parents by
// nonempty neighborhoods (every connected graph has a non-cut vertex).
//
// Class counts at every level are checked against the published census
// (OEIS A000088 for all graphs, A001349 for connected ones) and generation
// aborts on any mismatch.  --self-check cross-validates the canonical form
// against direct labeled enumeration instead of writing corpora.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "zagreb/graph.hpp"

namespace {

using zagreb::Graph;

constexpr int kMaxN = 9;  // canonical form must fit C(n,2) <= 64 bits anyway

// all[n] / connected[n] = number of isomorphism classes on n vertices
constexpr std::array<std::uint64_t, kMaxN + 1> kAllClasses = {
    1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
constexpr std::array<std::uint64_t, kMaxN + 1> kConnectedClasses = {
    1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080};

// Canonical form: upper-triangle adjacency bits in column-major pair order,
// pair (0,1) most significant, maximized over all vertex orderings.  Branch
// and bound on the shared prefix: orderings are built one vertex at a time
// and a partial ordering dies as soon as its bits fall below the incumbent.
class Canonizer {
  public:
    std::uint64_t canonical(const Graph& g) {
        n_ = g.order();
        if (n_ > kMaxN) throw std::invalid_argument("canonical form supports n <= 9");
        total_bits_ = n_ * (n_ - 1) / 2;
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
        best_ = 0;
        place(0, 0, 0, 0);
        return best_;
    }

  private:
    void place(int depth, std::uint64_t used, std::uint64_t prefix, int bits) {
        if (depth == n_) {
            if (prefix > best_) best_ = prefix;
            return;
        }
        // Packed adjacency-to-placed bits per unplaced vertex, earliest placed
        // vertex most significant; larger packs first so the greedy leftmost
        // descent seeds a strong incumbent.
        std::array<std::pair<std::uint64_t, int>, kMaxN> cand;
        int count = 0;
        for (int v = 0; v < n_; ++v) {
            if (used & zagreb::bit(v)) continue;
            std::uint64_t pack = 0;
            for (int i = 0; i < depth; ++i)
                pack = (pack << 1) | ((adj_[order_[i]] >> v) & 1);
            cand[count++] = {pack, v};
        }
        std::sort(cand.begin(), cand.begin() + count,
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        for (int c = 0; c < count; ++c) {
            const auto [pack, v] = cand[c];
            const int new_bits = bits + depth;
            const std::uint64_t new_prefix = (prefix << depth) | pack;
            if (new_prefix < (best_ >> (total_bits_ - new_bits))) break;  // sorted: rest worse
            if (is_twin_of_earlier(cand, c)) continue;  // sibling subtree already explored
            order_[depth] = v;
            place(depth + 1, used | zagreb::bit(v), new_prefix, new_bits);
        }
    }

    // u, v are twins when swapping them is an automorphism: equal neighbor
    // sets apart from one another.  Twins produce identical subtrees.
    bool is_twin_of_earlier(const std::array<std::pair<std::uint64_t, int>, kMaxN>& cand,
                            int c) const {
        for (int e = c - 1; e >= 0; --e) {
            if (cand[e].first != cand[c].first) break;  // sorted; twins share the pack
            const int u = cand[e].second, v = cand[c].second;
            const std::uint64_t diff = adj_[u] ^ adj_[v];
            if (diff == 0 || diff == (zagreb::bit(u) | zagreb::bit(v))) return true;
        }
        return false;
    }

    int n_ = 0;
    int total_bits_ = 0;
    std::uint64_t best_ = 0;
    std::array<std::uint64_t, kMaxN> adj_{};
    std::array<int, kMaxN> order_{};
};

Graph unpack(int n, std::uint64_t canon) {
    Graph g(n);
    const int total = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((canon >> (total - 1 - zagreb::pair_bit_index(i, j))) & 1) g.add_edge(i, j);
    return g;
}

Graph extend(const Graph& parent, std::uint64_t neighborhood) {
    const int m = parent.order();
    Graph g(m + 1);
    for (int v = 0; v < m; ++v)
        for (int u = v + 1; u < m; ++u)
            if (parent.has_edge(v, u)) g.add_edge(v, u);
    for (int v = 0; v < m; ++v)
        if (neighborhood & zagreb::bit(v)) g.add_edge(v, m);
    return g;
}

// All classes on parent_n + 1 vertices reachable from `parents`; with
// connected_only set, parents must all be connected and only connected
// children are produced (attachment by at least one edge).
std::vector<std::uint64_t> grow(const std::vector<std::uint64_t>& parents, int parent_n,
                                bool connected_only) {
    std::vector<std::uint64_t> out;
    Canonizer canon;
    const std::uint64_t top = std::uint64_t(1) << parent_n;
    for (std::uint64_t pc : parents) {
        Graph parent = unpack(parent_n, pc);
        for (std::uint64_t mask = connected_only ? 1 : 0; mask < top; ++mask)
            out.push_back(canon.canonical(extend(parent, mask)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void expect_count(const std::string& what, std::size_t got, std::uint64_t want) {
    if (got != want)
        throw std::runtime_error(what + ": generated " + std::to_string(got) +
                                 " classes, census says " + std::to_string(want));
    std::cout << what << ": " << got << " classes (matches census)\n";
}

void write_corpus(const std::string& path, int n, const std::vector<std::uint64_t>& classes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    for (std::uint64_t c : classes) out << zagreb::encode_graph6(unpack(n, c)) << '\n';
    if (!out) throw std::runtime_error("short write to '" + path + "'");
    std::cout << "wrote " << path << " (" << classes.size() << " records)\n";
}

int generate(const std::string& out_dir) {
    std::vector<std::uint64_t> classes = {0};  // the 1-vertex graph
    for (int n = 1; n < 8; ++n) {
        classes = grow(classes, n, false);
        expect_count("n=" + std::to_string(n + 1) + " all", classes.size(),
                     kAllClasses[n + 1]);
    }
    write_corpus(out_dir + "/graph8.g6", 8, classes);

    std::vector<std::uint64_t> connected;
    for (std::uint64_t c : classes)
        if (zagreb::is_connected(unpack(8, c))) connected.push_back(c);
    expect_count("n=8 connected", connected.size(), kConnectedClasses[8]);
    write_corpus(out_dir + "/graph8c.g6", 8, connected);

    std::vector<std::uint64_t> nine = grow(connected, 8, true);
    expect_count("n=9 connected", nine.size(), kConnectedClasses[9]);
    write_corpus(out_dir + "/graph9c.g6", 9, nine);
    return 0;
}

// Independent cross-check of the canonical form: canonizing every labeled
// graph directly must yield exactly the census numbers of distinct values,
// and each value must survive an unpack/re-canonize round trip.
int self_check(int max_n) {
    Canonizer canon;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::uint64_t> all, conn;
        zagreb::for_each_labeled(n, false, [&](const Graph& g) {
            const std::uint64_t c = canon.canonical(g);
            all.push_back(c);
            if (zagreb::is_connected(g)) conn.push_back(c);
        });
        for (auto* v : {&all, &conn}) {
            std::sort(v->begin(), v->end());
            v->erase(std::unique(v->begin(), v->end()), v->end());
        }
        for (std::uint64_t c : all)
            if (canon.canonical(unpack(n, c)) != c)
                throw std::runtime_error("canonical form not idempotent at n=" +
                                         std::to_string(n));
        expect_count("self-check n=" + std::to_string(n) + " all", all.size(),
                     kAllClasses[n]);
        expect_count("self-check n=" + std::to_string(n) + " connected", conn.size(),
                     kConnectedClasses[n]);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generate isomorphism-reduced graph6 corpora with census checks"};
    std::string out_dir = "data";
    int check_n = 0;
    app.add_option("--out-dir", out_dir, "directory for graph8.g6, graph8c.g6, graph9c.g6");
    app.add_option("--self-check", check_n,
                   "instead of generating, validate the canonical form on all labeled "
                   "graphs up to this order")
        ->check(CLI::Range(1, 7));
    CLI11_PARSE(app, argc, argv);

    try {
        return check_n > 0 ? self_check(check_n) : generate(out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
