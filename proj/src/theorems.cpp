#include "zagreb/theorems.hpp"

#include <algorithm>

#include "zagreb/invariants.hpp"

namespace zagreb {

namespace {

// Shared shape of all three thresholds:
//   slack * Delta^2 + (e * (delta + slack))^2 / (4 * delta * slack * tail)
// where slack counts the vertices outside the relevant set.  Every factor
// fits comfortably in 64 bits for n <= 62 (e <= 1891).
Rational threshold(int slack, int tail, int e, int delta, int Delta) {
    long long num = static_cast<long long>(e) * (delta + slack);
    num *= num;
    long long den = 4LL * delta * slack * tail;
    Rational r(num);
    r /= den;
    r += static_cast<long long>(slack) * Delta * Delta;
    return r;
}

}  // namespace

Rational t1_rhs(int n, int k, int e, int delta, int Delta) {
    if (n < 3) throw std::invalid_argument("t1_rhs requires n >= 3");
    if (k < 2) throw std::invalid_argument("t1_rhs requires k >= 2");
    if (delta < 1) throw std::invalid_argument("t1_rhs requires delta >= 1");
    if (n - k - 1 < 1)
        throw std::invalid_argument("t1_rhs requires n - k - 1 >= 1");
    return threshold(n - k - 1, k + 1, e, delta, Delta);
}

Rational t2_rhs(int n, int k, int e, int delta, int Delta) {
    if (k < 1) throw std::invalid_argument("t2_rhs requires k >= 1");
    if (delta < 1) throw std::invalid_argument("t2_rhs requires delta >= 1");
    if (n - k - 2 < 1)
        throw std::invalid_argument("t2_rhs requires n - k - 2 >= 1");
    return threshold(n - k - 2, k + 2, e, delta, Delta);
}

Rational t3_bound(int n, int e, int delta, int Delta, int beta) {
    if (delta < 1) throw std::invalid_argument("t3_bound requires delta >= 1");
    if (beta < 1 || beta > n - 1)
        throw std::invalid_argument("t3_bound requires 1 <= beta <= n - 1");
    return threshold(n - beta, beta, e, delta, Delta);
}

std::optional<std::pair<int, int>> recognize_complete_bipartite(const Graph& g) {
    auto parts = bipartition(g);
    if (!parts) return std::nullopt;
    int a = popcount(parts->a), b = popcount(parts->b);
    if (a == 0 || b == 0) return std::nullopt;
    if (g.edge_count() != a * b) return std::nullopt;  // not complete across
    if (a > b) std::swap(a, b);
    return std::make_pair(a, b);
}

namespace {

// Smallest-k scan shared by the two threshold checkers: `slack_of(k)` must
// stay >= 1 for the threshold to be defined.
struct ThresholdScan {
    int k_used = 0;
    bool met = false;
    Rational rhs;  // at k_used once met, otherwise min over tested k
    bool any_tested = false;
};

template <typename RhsFn>
ThresholdScan scan_thresholds(long long m1, int k_lo, int k_hi, RhsFn&& rhs_at) {
    ThresholdScan s;
    for (int k = k_lo; k <= k_hi; ++k) {
        Rational r = rhs_at(k);
        if (!s.any_tested || r < s.rhs) s.rhs = r;
        s.any_tested = true;
        if (m1 >= r) {
            s.met = true;
            s.k_used = k;
            s.rhs = r;
            break;
        }
    }
    return s;
}

}  // namespace

TheoremVerdict check_theorem1(const Graph& g) {
    TheoremVerdict v;
    v.theorem = TheoremId::T1;
    v.lhs_m1 = zagreb_m1(g);
    const int n = g.order();
    if (n < 3) {
        v.why_not = "n < 3";
        return v;
    }
    const int kappa = vertex_connectivity(g);
    if (kappa < 2) {
        v.why_not = "kappa < 2";
        return v;
    }
    v.applicable = true;
    DegreeProfile p = degree_profile(g);
    ThresholdScan s = scan_thresholds(v.lhs_m1, 2, std::min(kappa, n - 2), [&](int k) {
        return t1_rhs(n, k, p.e, p.delta, p.Delta);
    });
    v.condition_met = s.met;
    v.k_used = s.k_used;
    if (s.any_tested) v.rhs = s.rhs;
    v.conclusion_holds = is_hamiltonian(g);
    if (v.condition_met) {
        auto cb = recognize_complete_bipartite(g);
        if (cb && cb->first == v.k_used && cb->second == v.k_used + 1)
            v.exception = ExceptionalFamily::CompleteBipartiteKK1;
    }
    v.consistent = !v.condition_met || v.conclusion_holds ||
                   v.exception != ExceptionalFamily::None;
    return v;
}

TheoremVerdict check_theorem2(const Graph& g) {
    TheoremVerdict v;
    v.theorem = TheoremId::T2;
    v.lhs_m1 = zagreb_m1(g);
    const int n = g.order();
    if (n < 9) {
        v.why_not = "n < 9";
        return v;
    }
    const int kappa = vertex_connectivity(g);
    if (kappa < 1) {
        v.why_not = "kappa < 1";
        return v;
    }
    v.applicable = true;
    DegreeProfile p = degree_profile(g);
    ThresholdScan s = scan_thresholds(v.lhs_m1, 1, std::min(kappa, n - 3), [&](int k) {
        return t2_rhs(n, k, p.e, p.delta, p.Delta);
    });
    v.condition_met = s.met;
    v.k_used = s.k_used;
    if (s.any_tested) v.rhs = s.rhs;
    v.conclusion_holds = is_traceable(g);
    if (v.condition_met) {
        auto cb = recognize_complete_bipartite(g);
        if (cb && cb->first == v.k_used && cb->second == v.k_used + 2)
            v.exception = ExceptionalFamily::CompleteBipartiteKK2;
    }
    v.consistent = !v.condition_met || v.conclusion_holds ||
                   v.exception != ExceptionalFamily::None;
    return v;
}

namespace {

EqualityCertificate build_certificate(const Graph& g, int beta, const DegreeProfile& p) {
    EqualityCertificate cert;
    const int n = g.order();
    const int outside = n - beta;

    if (p.delta == outside) {
        cert.branch = EqualityCertificate::Branch::CompleteBipartite;
        auto cb = recognize_complete_bipartite(g);
        bool is_cb = cb.has_value();
        bool parts_match = is_cb && cb->first == outside && cb->second == beta;
        cert.checks.push_back({"complete-bipartite", is_cb});
        cert.checks.push_back({"parts-are-beta-and-complement", parts_match});
        if (parts_match) {
            auto bp = bipartition(g);
            cert.I = popcount(bp->a) == beta ? bp->a : bp->b;
        }
        cert.all_ok = is_cb && parts_match;
        return cert;
    }

    cert.branch = EqualityCertificate::Branch::PQFamily;
    cert.I = detail::lex_min_max_independent_set(g);
    const VertexSet rest = g.vertex_mask() & ~cert.I;

    bool no_edges_outside = true;
    bool outside_all_Delta = true;
    for (VertexSet s = rest; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        if (g.neighbors(v) & rest) no_edges_outside = false;
        if (g.degree(v) != p.Delta) outside_all_Delta = false;
    }

    bool inside_split = true;
    for (VertexSet s = cert.I; s;) {
        int u = std::countr_zero(s);
        s &= s - 1;
        if (g.degree(u) == outside)
            cert.P |= bit(u);
        else if (g.degree(u) == p.delta)
            cert.Q |= bit(u);
        else
            inside_split = false;
    }

    // |P| = d b / (d + n - b) and |Q| = (n - b) b / (d + n - b), both exact.
    const long long split = p.delta + outside;
    bool p_size_ok = static_cast<long long>(popcount(cert.P)) * split ==
                     static_cast<long long>(p.delta) * beta;
    bool q_size_ok = static_cast<long long>(popcount(cert.Q)) * split ==
                     static_cast<long long>(outside) * beta;

    cert.checks.push_back({"bipartite-across-I", no_edges_outside});
    cert.checks.push_back({"outside-degrees-all-Delta", outside_all_Delta});
    cert.checks.push_back({"inside-degrees-split-P-Q", inside_split});
    cert.checks.push_back({"P-size-integral-and-exact", p_size_ok});
    cert.checks.push_back({"Q-size-integral-and-exact", q_size_ok});
    cert.all_ok = no_edges_outside && outside_all_Delta && inside_split &&
                  p_size_ok && q_size_ok;
    return cert;
}

}  // namespace

Theorem3Outcome check_theorem3(const Graph& g) {
    DegreeProfile p = degree_profile(g);
    if (p.delta < 1)
        throw std::invalid_argument("the t3 bound requires minimum degree >= 1");

    Theorem3Outcome out;
    TheoremVerdict& v = out.verdict;
    v.theorem = TheoremId::T3;
    v.applicable = true;
    v.lhs_m1 = zagreb_m1(g);
    const int beta = independence_number(g);
    v.rhs = t3_bound(g.order(), p.e, p.delta, p.Delta, beta);
    v.conclusion_holds = v.lhs_m1 <= v.rhs;  // the bound itself
    v.condition_met = v.lhs_m1 == v.rhs;     // equality attained

    EqualityCertificate cert = build_certificate(g, beta, p);
    // The characterization is an iff: equality and structure must agree.
    v.consistent = v.conclusion_holds && v.condition_met == cert.all_ok;
    if (v.condition_met) {
        if (cert.all_ok)
            v.exception = cert.branch == EqualityCertificate::Branch::CompleteBipartite
                              ? ExceptionalFamily::T3CompleteBipartite
                              : ExceptionalFamily::T3PQFamily;
        out.certificate = std::move(cert);
    }
    return out;
}

LemmaOutcome chvatal_erdos_hamiltonian(const Graph& g) {
    LemmaOutcome o;
    if (g.order() < 3) return o;
    o.applicable = true;
    o.condition = independence_number(g) <= vertex_connectivity(g);
    o.conclusion = is_hamiltonian(g);
    o.consistent = !o.condition || o.conclusion;
    return o;
}

LemmaOutcome chvatal_erdos_traceable(const Graph& g) {
    LemmaOutcome o;
    o.applicable = true;
    const int kappa = g.order() == 1 ? 0 : vertex_connectivity(g);
    o.condition = independence_number(g) <= kappa + 1;
    o.conclusion = is_traceable(g);
    o.consistent = !o.condition || o.conclusion;
    return o;
}

LemmaOutcome moon_moser_hamiltonian(const Graph& g) {
    LemmaOutcome o;
    auto parts = bipartition(g);
    // parts of size one admit no cycle at all, so the theorem starts at 2
    if (!parts || popcount(parts->a) != popcount(parts->b) || popcount(parts->a) < 2)
        return o;
    o.applicable = true;
    const int half = popcount(parts->a);
    o.condition = true;
    for (VertexSet xs = parts->a; xs && o.condition;) {
        int x = std::countr_zero(xs);
        xs &= xs - 1;
        for (VertexSet ys = parts->b & ~g.neighbors(x); ys;) {
            int y = std::countr_zero(ys);
            ys &= ys - 1;
            if (g.degree(x) + g.degree(y) < half + 1) {
                o.condition = false;
                break;
            }
        }
    }
    o.conclusion = is_hamiltonian(g);
    o.consistent = !o.condition || o.conclusion;
    return o;
}

namespace {

int jackson_promise(const Graph& g, VertexSet big_side, VertexSet small_side) {
    int s = g.order(), t = g.order();
    for (VertexSet m = big_side; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        s = std::min(s, g.degree(v));
    }
    for (VertexSet m = small_side; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        t = std::min(t, g.degree(v));
    }
    return 2 * std::min({popcount(small_side), s + t - 1, 2 * s - 2});
}

}  // namespace

JacksonOutcome jackson_cycle_bound(const Graph& g) {
    if (g.order() > 16)
        throw std::invalid_argument("jackson check is capped at n <= 16");
    JacksonOutcome o;
    auto parts = bipartition(g);
    if (!parts || g.order() < 3 || vertex_connectivity(g) < 2) return o;
    o.applicable = true;
    const int a = popcount(parts->a), b = popcount(parts->b);
    if (a > b)
        o.promised_length = jackson_promise(g, parts->a, parts->b);
    else if (b > a)
        o.promised_length = jackson_promise(g, parts->b, parts->a);
    else
        o.promised_length = std::max(jackson_promise(g, parts->a, parts->b),
                                     jackson_promise(g, parts->b, parts->a));
    o.circumference = circumference(g);
    o.consistent = o.circumference >= o.promised_length;
    return o;
}

}  // namespace zagreb
