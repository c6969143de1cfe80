#include "zagreb/constructors.hpp"

#include <limits>
#include <string>

#include "zagreb/invariants.hpp"
#include "zagreb/theorems.hpp"

namespace zagreb {

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete bipartite parts must be nonempty");
    if (a + b > 62)
        throw std::invalid_argument("complete bipartite order is capped at 62");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycles need n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);  // validates n >= 1
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph t3_equality_graph(const EqualityFamilySpec& spec) {
    const int n = spec.n, beta = spec.beta, delta = spec.delta;
    const auto fail = [&](const std::string& what) {
        throw std::invalid_argument("infeasible equality family (n=" +
                                    std::to_string(n) + ", beta=" + std::to_string(beta) +
                                    ", delta=" + std::to_string(delta) + "): " + what);
    };
    if (n < 2 || n > 62) fail("n must be in [2, 62]");
    if (beta < 1 || beta >= n) fail("beta must be in [1, n - 1]");
    const int outside = n - beta;
    if (delta < 1) fail("delta must be >= 1");
    if (delta >= outside) fail("delta must be < n - beta");

    const int split = delta + outside;
    if ((static_cast<long long>(delta) * beta) % split != 0)
        fail("|P| = " + std::to_string(delta) + "*" + std::to_string(beta) + "/" +
             std::to_string(split) + " is not an integer");
    if ((static_cast<long long>(outside) * beta) % split != 0)
        fail("|Q| = " + std::to_string(outside) + "*" + std::to_string(beta) + "/" +
             std::to_string(split) + " is not an integer");
    const int p_size = static_cast<int>(static_cast<long long>(delta) * beta / split);
    const int q_size = beta - p_size;
    const long long e = 2LL * delta * beta * outside / split;
    if (e % outside != 0) fail("Delta = e / (n - beta) is not an integer");
    const long long Delta = e / outside;
    if (Delta > beta) fail("outside degree e / (n - beta) exceeds beta");
    // Outside vertices must carry the maximum degree, and P vertices reach
    // degree n - beta, so the family is incoherent unless Delta >= n - beta.
    if (Delta < outside)
        fail("outside degree e / (n - beta) is below the inside P degree n - beta");

    // Vertices 0..beta-1 form I (P first, then Q); the rest sit outside.
    Graph g(n);
    for (int u = 0; u < p_size; ++u)
        for (int v = beta; v < n; ++v) g.add_edge(u, v);
    for (int i = 0; i < q_size; ++i)
        for (int j = 0; j < delta; ++j)
            g.add_edge(p_size + i, beta + (i * delta + j) % outside);

    // The construction is only correct if the realized graph attains the
    // bound with the requested independence number; anything else is a bug
    // worth failing loudly over.
    if (independence_number(g) != beta)
        throw std::runtime_error("equality family realization drifted: independence "
                                 "number != requested beta");
    Theorem3Outcome t3 = check_theorem3(g);
    if (!t3.verdict.condition_met || !t3.certificate || !t3.certificate->all_ok)
        throw std::runtime_error("equality family realization failed to attain the bound");
    return g;
}

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Unbiased draw from [0, bound) by rejecting the wrap-around zone.
    std::uint64_t bounded(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

}  // namespace

Graph random_graph(int n, const Rational& p, std::uint64_t seed) {
    if (p < 0 || p > 1)
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    const BigInt num_big = numerator(p), den_big = denominator(p);
    if (den_big > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw std::invalid_argument("edge probability denominator exceeds 64 bits");
    const std::uint64_t num = static_cast<std::uint64_t>(num_big);
    const std::uint64_t den = static_cast<std::uint64_t>(den_big);

    Graph g(n);
    SplitMix64 rng{seed};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (num == 0) continue;
            if (num == den || rng.bounded(den) < num) g.add_edge(i, j);
        }
    return g;
}

}  // namespace zagreb
