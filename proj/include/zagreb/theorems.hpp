#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/rational.hpp"

namespace zagreb {

// Zagreb-index thresholds.  All three are exact rationals:
//   t1_rhs  = (n-k-1) D^2 + (e (d+n-k-1))^2 / (4 d (n-k-1) (k+1))
//   t2_rhs  = (n-k-2) D^2 + (e (d+n-k-2))^2 / (4 d (n-k-2) (k+2))
//   t3_bound= (n-b) D^2 + (e (d+n-b))^2 / (4 d (n-b) b)
// with d = min degree, D = max degree, b = independence number.  Guards on
// the degenerate parameter combinations throw std::invalid_argument.
Rational t1_rhs(int n, int k, int e, int delta, int Delta);
Rational t2_rhs(int n, int k, int e, int delta, int Delta);
Rational t3_bound(int n, int e, int delta, int Delta, int beta);

enum class TheoremId { T1, T2, T3 };

enum class ExceptionalFamily {
    None,
    CompleteBipartiteKK1,  // K_{k,k+1} at the triggering k
    CompleteBipartiteKK2,  // K_{k,k+2} at the triggering k
    T3CompleteBipartite,   // K_{beta, n-beta}
    T3PQFamily,            // bipartite family with inside degrees split d / n-beta
};

struct TheoremVerdict {
    TheoremId theorem = TheoremId::T1;
    bool applicable = false;
    std::string why_not;  // empty when applicable
    int k_used = 0;       // smallest k whose threshold triggered (t1/t2)
    long long lhs_m1 = 0;
    Rational rhs;  // threshold at k_used; min over tested k when untriggered
    bool condition_met = false;
    bool conclusion_holds = false;
    ExceptionalFamily exception = ExceptionalFamily::None;
    bool consistent = true;
};

// Hamiltonicity threshold: evaluates every k in 2..kappa (respecting the
// n-k-1 >= 1 guard); condition_met => hamiltonian or K_{k,k+1}.
TheoremVerdict check_theorem1(const Graph& g);

// Traceability threshold, n >= 9: every k in 1..kappa (n-k-2 >= 1 guard);
// condition_met => traceable or K_{k,k+2}.
TheoremVerdict check_theorem2(const Graph& g);

// Witness that a graph attains the t3 upper bound.  Branch selection is
// forced by delta: delta = n - beta means complete bipartite, delta < n -
// beta means the two-degree-class bipartite family with
//   P = inside vertices of degree n - beta,  |P| = d b / (d + n - b)
//   Q = inside vertices of degree delta,     |Q| = (n - b) b / (d + n - b).
struct EqualityCertificate {
    enum class Branch { CompleteBipartite, PQFamily };
    Branch branch = Branch::CompleteBipartite;
    VertexSet I = 0;  // the maximum independent set used
    VertexSet P = 0;
    VertexSet Q = 0;
    struct Item {
        std::string name;
        bool ok = false;
    };
    std::vector<Item> checks;
    bool all_ok = false;
};

struct Theorem3Outcome {
    TheoremVerdict verdict;
    // Present exactly when m1 equals the bound; all_ok then records whether
    // the structural characterization held (consistent is false otherwise).
    std::optional<EqualityCertificate> certificate;
};

// Upper bound plus full equality characterization.  Throws for minimum
// degree 0 (the bound needs delta >= 1).
Theorem3Outcome check_theorem3(const Graph& g);

// (a, b) with a <= b when the graph is complete bipartite with two nonempty
// sides, nullopt otherwise.
std::optional<std::pair<int, int>> recognize_complete_bipartite(const Graph& g);

struct LemmaOutcome {
    bool applicable = false;
    bool condition = false;
    bool conclusion = false;
    bool consistent = true;
};

// beta <= kappa implies hamiltonian (n >= 3).
LemmaOutcome chvatal_erdos_hamiltonian(const Graph& g);
// beta <= kappa + 1 implies traceable (kappa of a single vertex counts as 0).
LemmaOutcome chvatal_erdos_traceable(const Graph& g);
// Balanced bipartite, parts of size >= 2, with d(x) + d(y) >= n/2 + 1 for
// every nonadjacent cross pair implies hamiltonian.  Parts come from the
// deterministic bipartition.
LemmaOutcome moon_moser_hamiltonian(const Graph& g);

struct JacksonOutcome {
    bool applicable = false;
    int promised_length = 0;
    int circumference = 0;
    bool consistent = true;
};

// 2-connected bipartite with parts |A| >= |B|, min degree s over A and t
// over B, promises a cycle of length >= 2 min(|B|, s+t-1, 2s-2).  When the
// parts tie in size both orientations qualify, so the stronger promise is
// checked.  Throws above the circumference ceiling (n > 16).
JacksonOutcome jackson_cycle_bound(const Graph& g);

}  // namespace zagreb
