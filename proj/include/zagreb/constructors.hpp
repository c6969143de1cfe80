#pragma once

#include <cstdint>

#include "zagreb/graph.hpp"
#include "zagreb/rational.hpp"

namespace zagreb {

// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.  Both sides
// nonempty, a + b <= 62 so every result stays encodable.
Graph complete_bipartite(int a, int b);

// C_n (n >= 3) and P_n (n >= 1) with vertices in path order.
Graph cycle_graph(int n);
Graph path_graph(int n);

// Parameters of the two-degree-class bipartite family that attains the t3
// bound: an independent side I of size beta whose vertices have degree
// n - beta (the P part) or delta (the Q part), with everything outside I of
// equal degree.  Feasibility demands
//   1 <= delta < n - beta,
//   |P| = delta beta / (delta + n - beta)        integral,
//   |Q| = (n - beta) beta / (delta + n - beta)   integral,
//   Delta = e / (n - beta) integral and <= beta, e = 2 delta beta (n-beta) / (delta + n - beta).
struct EqualityFamilySpec {
    int n = 0;
    int beta = 0;
    int delta = 0;
};

// Realizes the family: P vertices join every outside vertex, and Q vertex i
// covers delta consecutive outside vertices starting at offset (i * delta)
// mod (n - beta), which spreads the Q edges evenly.  Throws
// std::invalid_argument with the violated condition when the parameters are
// infeasible, and std::runtime_error if the built graph fails to attain the
// bound or drifts off the requested independence number.
Graph t3_equality_graph(const EqualityFamilySpec& spec);

// G(n, p) with exact edge probability p (a rational in [0, 1]) and a fixed,
// documented generator: one SplitMix64 stream seeded with `seed`, one
// unbiased bounded draw per vertex pair in column order (0,1),(0,2),(1,2),...
// Identical (n, p, seed) triples produce identical graphs on every platform.
Graph random_graph(int n, const Rational& p, std::uint64_t seed);

}  // namespace zagreb
