#pragma once

#include <optional>

#include "zagreb/graph.hpp"

namespace zagreb {

// Parts of a proper 2-coloring.  The lowest-index vertex of every connected
// component lands in `a`, which makes the split deterministic.
struct Bipartition {
    VertexSet a = 0;
    VertexSet b = 0;
};

struct InvariantBundle {
    int n = 0;
    int e = 0;
    int delta = 0;
    int Delta = 0;
    long long m1 = 0;  // first Zagreb index, sum of squared degrees
    int beta = 0;      // independence number
    int kappa = 0;     // vertex connectivity
    bool hamiltonian = false;
    bool traceable = false;
    int circumference = 0;  // longest cycle length, 0 when acyclic
    std::optional<Bipartition> bipartition;
};

// Sum of squared degrees.
long long zagreb_m1(const Graph& g);

// Maximum independent set cardinality, branch and bound over neighbor
// bitsets.  Exact for every order the Graph type admits.
int independence_number(const Graph& g);

// Minimum vertex cut via unit-capacity max-flow on the vertex-split digraph,
// minimized over nonadjacent pairs; complete graphs return n - 1 by
// convention.  Throws for n < 2.
int vertex_connectivity(const Graph& g);

// Exact backtracking cycle/path search.  Orders above 24 are rejected rather
// than silently attempted; n < 3 graphs are never hamiltonian and a single
// vertex is trivially traceable.
bool is_hamiltonian(const Graph& g);
bool is_traceable(const Graph& g);

// Longest cycle length by exhaustive DFS, 0 when the graph is acyclic.
// Orders above 16 are rejected.
int circumference(const Graph& g);

// nullopt when an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

InvariantBundle full_bundle(const Graph& g);

namespace detail {
// Deterministic maximum independent set witness: vertices are admitted in
// increasing index order whenever a maximum set through them still exists.
// Internal helper for equality certificates and sweep checks; the public
// surface of independence_number stays cardinality-only.
VertexSet lex_min_max_independent_set(const Graph& g);
}  // namespace detail

}  // namespace zagreb
