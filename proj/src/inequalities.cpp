#include "zagreb/inequalities.hpp"

namespace zagreb {

namespace {

void validate(const PolyaSzegoInstance& inst) {
    if (inst.a.empty() || inst.a.size() != inst.b.size())
        throw std::invalid_argument("sequences must be nonempty and equally long");
    if (inst.a_min <= 0 || inst.b_min <= 0)
        throw std::invalid_argument("bounds must be positive");
    if (inst.a_min > inst.a_max || inst.b_min > inst.b_max)
        throw std::invalid_argument("lower bound exceeds upper bound");
    for (const auto& x : inst.a)
        if (x < inst.a_min || x > inst.a_max)
            throw std::invalid_argument("sequence entry outside its bounds");
    for (const auto& y : inst.b)
        if (y < inst.b_min || y > inst.b_max)
            throw std::invalid_argument("sequence entry outside its bounds");
}

}  // namespace

PolyaSzegoReport polya_szego_check(const PolyaSzegoInstance& inst) {
    validate(inst);
    Rational sum_a2 = 0, sum_b2 = 0, sum_ab = 0;
    for (std::size_t k = 0; k < inst.a.size(); ++k) {
        sum_a2 += inst.a[k] * inst.a[k];
        sum_b2 += inst.b[k] * inst.b[k];
        sum_ab += inst.a[k] * inst.b[k];
    }
    const Rational big = inst.a_max * inst.b_max, small = inst.a_min * inst.b_min;

    PolyaSzegoReport rep;
    rep.lhs = sum_a2 * sum_b2;
    rep.rhs = (big + small) * (big + small) / (4 * small * big) * sum_ab * sum_ab;
    rep.holds = rep.lhs <= rep.rhs;
    rep.equality = rep.lhs == rep.rhs;
    const Rational cross = inst.a_max * inst.b_min;
    rep.nu = cross * static_cast<int>(inst.a.size()) / (cross + inst.a_min * inst.b_max);
    rep.nu_integral = is_integer(rep.nu);
    return rep;
}

bool equality_pattern_matches(const PolyaSzegoInstance& inst) {
    validate(inst);
    if (inst.a_min == inst.a_max && inst.b_min == inst.b_max)
        return true;  // degenerate bounds: every admissible instance is extremal
    const Rational cross = inst.a_max * inst.b_min;
    const Rational nu =
        cross * static_cast<int>(inst.a.size()) / (cross + inst.a_min * inst.b_max);
    if (!is_integer(nu)) return false;

    // Count positions that can only play (a_min, b_max), only (a_max, b_min),
    // or either; any other value disqualifies the instance.
    long long only_low_high = 0, only_high_low = 0, both = 0;
    for (std::size_t k = 0; k < inst.a.size(); ++k) {
        bool low_high = inst.a[k] == inst.a_min && inst.b[k] == inst.b_max;
        bool high_low = inst.a[k] == inst.a_max && inst.b[k] == inst.b_min;
        if (low_high && high_low)
            ++both;
        else if (low_high)
            ++only_low_high;
        else if (high_low)
            ++only_high_low;
        else
            return false;
    }
    const BigInt nu_int = numerator(nu);
    return nu_int >= only_low_high && nu_int <= only_low_high + both &&
           BigInt(inst.a.size()) - nu_int >= only_high_low;
}

PolyaSzegoInstance equality_instance(const Rational& a_min, const Rational& a_max,
                                     const Rational& b_min, const Rational& b_max,
                                     int s) {
    if (s < 1) throw std::invalid_argument("sequence length must be >= 1");
    if (a_min <= 0 || b_min <= 0)
        throw std::invalid_argument("bounds must be positive");
    if (a_min > a_max || b_min > b_max)
        throw std::invalid_argument("lower bound exceeds upper bound");

    PolyaSzegoInstance inst;
    inst.a_min = a_min;
    inst.a_max = a_max;
    inst.b_min = b_min;
    inst.b_max = b_max;

    if (a_min == a_max && b_min == b_max) {
        // Bound coefficient degenerates to 1; every constant instance works.
        inst.a.assign(s, a_min);
        inst.b.assign(s, b_min);
        return inst;
    }

    const Rational cross = a_max * b_min;
    const Rational nu = cross * s / (cross + a_min * b_max);
    if (!is_integer(nu))
        throw std::invalid_argument("no equality instance: nu = " + to_string(nu) +
                                    " is not an integer");
    const long long nu_count = static_cast<long long>(numerator(nu));
    for (long long k = 0; k < s; ++k) {
        bool low_high = k < nu_count;
        inst.a.push_back(low_high ? a_min : a_max);
        inst.b.push_back(low_high ? b_max : b_min);
    }
    return inst;
}

DegreeSandwich degree_sandwich(const Graph& g, VertexSet independent_set) {
    if (independent_set & ~g.vertex_mask())
        throw std::invalid_argument("independent set contains out-of-range vertices");
    for (VertexSet s = independent_set; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        if (g.neighbors(v) & independent_set)
            throw std::invalid_argument("vertex set is not independent");
    }
    DegreeSandwich out;
    for (int v = 0; v < g.order(); ++v) {
        if (independent_set & bit(v))
            out.lower += g.degree(v);
        else
            out.upper += g.degree(v);
    }
    out.e = g.edge_count();
    out.tight_lower = out.lower == out.e;
    out.tight_upper = out.upper == out.e;
    return out;
}

}  // namespace zagreb
