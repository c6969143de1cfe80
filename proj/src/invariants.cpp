#include "zagreb/invariants.hpp"

#include <algorithm>
#include <array>

namespace zagreb {

long long zagreb_m1(const Graph& g) {
    long long m1 = 0;
    for (int v = 0; v < g.order(); ++v) {
        long long d = g.degree(v);
        m1 += d * d;
    }
    return m1;
}

namespace {

// Max independent set over `candidates`, classic two-way branch on a
// max-degree vertex with the trivial popcount bound.
struct MisSolver {
    const Graph& g;
    int best = 0;

    void run(VertexSet candidates, int size) {
        if (size + popcount(candidates) <= best) return;
        if (!candidates) {
            if (size > best) best = size;
            return;
        }
        int pick = -1, pick_deg = -1;
        for (VertexSet c = candidates; c;) {
            int v = std::countr_zero(c);
            c &= c - 1;
            int d = popcount(g.neighbors(v) & candidates);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        // Include first: reaching large sets early tightens the bound.
        run(candidates & ~g.neighbors(pick) & ~bit(pick), size + 1);
        run(candidates & ~bit(pick), size);
    }
};

int mis_size(const Graph& g, VertexSet candidates) {
    MisSolver s{g};
    s.run(candidates, 0);
    return s.best;
}

}  // namespace

int independence_number(const Graph& g) { return mis_size(g, g.vertex_mask()); }

namespace detail {

VertexSet lex_min_max_independent_set(const Graph& g) {
    int need = independence_number(g);
    VertexSet chosen = 0, avail = g.vertex_mask();
    for (int v = 0; v < g.order() && need > 0; ++v) {
        if (!(avail & bit(v))) continue;
        VertexSet rest = avail & ~g.neighbors(v) & ~bit(v);
        if (1 + mis_size(g, rest) >= need) {
            // a maximum set through v exists
            chosen |= bit(v);
            avail = rest;
            --need;
        } else {
            avail &= ~bit(v);
        }
    }
    return chosen;
}

}  // namespace detail

namespace {

// Unit-capacity max-flow on the vertex-split digraph: node v becomes
// v_in = v and v_out = v + n with a capacity-1 internal arc; each edge {u,v}
// contributes u_out -> v_in and v_out -> u_in with effectively unbounded
// capacity.  The max flow out(s) -> in(t) equals the minimum vertex cut for
// nonadjacent s, t (Menger).
struct SplitFlow {
    int n;
    std::vector<int> cap;  // (2n)^2 capacity matrix

    explicit SplitFlow(const Graph& g) : n(g.order()), cap(4 * n * n, 0) {
        const int big = g.order();  // any value > max possible flow
        for (int v = 0; v < n; ++v) at(v, v + n) = 1;
        for (int u = 0; u < n; ++u)
            for (VertexSet nb = g.neighbors(u); nb;) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                at(u + n, v) = big;
            }
    }

    int& at(int i, int j) { return cap[i * 2 * n + j]; }

    int max_flow(int s, int t) {  // s, t are node ids in the split digraph
        std::vector<int> residual = cap;
        auto r = [&](int i, int j) -> int& { return residual[i * 2 * n + j]; };
        int flow = 0;
        std::array<int, 128> parent{};
        while (true) {
            std::fill(parent.begin(), parent.begin() + 2 * n, -1);
            parent[s] = s;
            std::array<int, 128> queue{};
            int head = 0, tail = 0;
            queue[tail++] = s;
            while (head < tail && parent[t] < 0) {
                int u = queue[head++];
                for (int v = 0; v < 2 * n; ++v)
                    if (parent[v] < 0 && r(u, v) > 0) {
                        parent[v] = u;
                        queue[tail++] = v;
                    }
            }
            if (parent[t] < 0) return flow;
            for (int v = t; v != s; v = parent[v]) {
                r(parent[v], v) -= 1;
                r(v, parent[v]) += 1;
            }
            ++flow;
        }
    }
};

}  // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2)
        throw std::invalid_argument("vertex connectivity requires n >= 2");
    SplitFlow flow(g);
    int best = n - 1;  // complete-graph convention; also an upper bound
    for (int s = 0; s < n && best > 0; ++s)
        for (int t = s + 1; t < n && best > 0; ++t) {
            if (g.has_edge(s, t)) continue;
            int f = flow.max_flow(s + n, t);
            if (f < best) best = f;
        }
    return best;
}

namespace {

// Hamiltonian cycle backtracking anchored at vertex 0.  Prunes a branch as
// soon as some unvisited vertex has fewer than two usable neighbors, where
// usable means unvisited or one of the two path endpoints (vertex 0 and the
// current tail): interior path vertices can never serve a future cycle edge.
struct CycleSearch {
    const Graph& g;
    VertexSet all;

    bool extend(int last, VertexSet visited) {
        if (visited == all) return g.has_edge(last, 0);
        VertexSet unvisited = all & ~visited;
        VertexSet usable = unvisited | bit(0) | bit(last);
        for (VertexSet u = unvisited; u;) {
            int v = std::countr_zero(u);
            u &= u - 1;
            if (popcount(g.neighbors(v) & usable) < 2) return false;
        }
        for (VertexSet c = g.neighbors(last) & unvisited; c;) {
            int v = std::countr_zero(c);
            c &= c - 1;
            if (extend(v, visited | bit(v))) return true;
        }
        return false;
    }
};

bool has_hamiltonian_cycle(const Graph& g) {
    const int n = g.order();
    if (n < 3) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2) return false;
    if (!is_connected(g)) return false;
    CycleSearch s{g, g.vertex_mask()};
    return s.extend(0, 1);
}

}  // namespace

bool is_hamiltonian(const Graph& g) {
    if (g.order() > 24)
        throw std::invalid_argument("hamiltonicity search is capped at n <= 24");
    return has_hamiltonian_cycle(g);
}

bool is_traceable(const Graph& g) {
    const int n = g.order();
    if (n > 24)
        throw std::invalid_argument("traceability search is capped at n <= 24");
    if (n == 1) return true;
    // A hamiltonian path exists iff adding an apex adjacent to everything
    // yields a hamiltonian cycle.
    Graph apex(n + 1);
    for (int u = 0; u < n; ++u) {
        for (VertexSet nb = g.neighbors(u); nb;) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (u < v) apex.add_edge(u, v);
        }
        apex.add_edge(u, n);
    }
    return has_hamiltonian_cycle(apex);
}

namespace {

// Longest cycle whose minimum vertex is `anchor`; paths grow over vertices
// above the anchor only, so each cycle is generated once up to rotation.
struct CircumferenceSearch {
    const Graph& g;
    int anchor;
    int best = 0;

    void extend(int last, VertexSet visited, int length) {
        if (length + popcount(g.vertex_mask() & ~visited & ~(bit(anchor) - 1)) <= best)
            return;  // even taking every remaining vertex cannot beat best
        if (length >= 3 && g.has_edge(last, anchor) && length > best)
            best = length;
        if (best == g.order()) return;
        VertexSet cands = g.neighbors(last) & ~visited & ~(bit(anchor + 1) - 1);
        while (cands) {
            int v = std::countr_zero(cands);
            cands &= cands - 1;
            extend(v, visited | bit(v), length + 1);
            if (best == g.order()) return;
        }
    }
};

}  // namespace

int circumference(const Graph& g) {
    if (g.order() > 16)
        throw std::invalid_argument("circumference search is capped at n <= 16");
    int best = 0;
    for (int anchor = 0; anchor < g.order() - 2; ++anchor) {
        CircumferenceSearch s{g, anchor, best};
        s.extend(anchor, bit(anchor), 1);
        best = s.best;
        if (best == g.order()) break;
    }
    return best;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    Bipartition parts;
    VertexSet colored = 0;
    for (int root = 0; root < g.order(); ++root) {
        if (colored & bit(root)) continue;
        // BFS 2-coloring of root's component; root goes to side a.
        parts.a |= bit(root);
        colored |= bit(root);
        VertexSet frontier = bit(root);
        bool frontier_in_a = true;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f;) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            // Neighbors of side-a vertices must all fit in side b, and vice
            // versa; any edge inside a frontier is an odd cycle.
            VertexSet same = frontier_in_a ? parts.a : parts.b;
            if (next & same) return std::nullopt;
            next &= ~colored;
            colored |= next;
            (frontier_in_a ? parts.b : parts.a) |= next;
            frontier = next;
            frontier_in_a = !frontier_in_a;
        }
    }
    // Cross-check: no edge may stay inside either side.
    for (int u = 0; u < g.order(); ++u) {
        VertexSet side = (parts.a & bit(u)) ? parts.a : parts.b;
        if (g.neighbors(u) & side) return std::nullopt;
    }
    return parts;
}

InvariantBundle full_bundle(const Graph& g) {
    InvariantBundle b;
    DegreeProfile p = degree_profile(g);
    b.n = g.order();
    b.e = p.e;
    b.delta = p.delta;
    b.Delta = p.Delta;
    b.m1 = zagreb_m1(g);
    b.beta = independence_number(g);
    b.kappa = g.order() == 1 ? 0 : vertex_connectivity(g);
    b.hamiltonian = is_hamiltonian(g);
    b.traceable = is_traceable(g);
    b.circumference = circumference(g);
    b.bipartition = bipartition(g);
    return b;
}

}  // namespace zagreb
