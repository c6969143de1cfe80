#pragma once

#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/rational.hpp"

namespace zagreb {

// Two positive sequences with entrywise bounds a_min <= a_k <= a_max and
// b_min <= b_k <= b_max.
struct PolyaSzegoInstance {
    std::vector<Rational> a;
    std::vector<Rational> b;
    Rational a_min, a_max;
    Rational b_min, b_max;
};

struct PolyaSzegoReport {
    Rational lhs;          // sum(a^2) * sum(b^2)
    Rational rhs;          // ((a_max b_max + a_min b_min)^2 / (4 a_min b_min a_max b_max)) * sum(ab)^2
    bool holds = false;    // lhs <= rhs
    bool equality = false; // lhs == rhs exactly
    Rational nu;           // a_max b_min s / (a_max b_min + a_min b_max)
    bool nu_integral = false;
};

// Exact evaluation of the bound.  Throws std::invalid_argument when the
// instance is malformed (empty or mismatched sequences, nonpositive or
// inverted bounds, entries outside their bounds).
PolyaSzegoReport polya_szego_check(const PolyaSzegoInstance& inst);

// True iff the sequences consist, up to reordering, of nu positions equal to
// (a_min, b_max) and s - nu positions equal to (a_max, b_min); when all four
// bounds coincide pairwise (a_min = a_max and b_min = b_max) any instance
// qualifies.  This is exactly the shape that attains equality.
bool equality_pattern_matches(const PolyaSzegoInstance& inst);

// Builds an instance attaining equality for the given bounds and length, or
// throws std::invalid_argument when nu is not an integer (no such instance
// exists for strict bounds).
PolyaSzegoInstance equality_instance(const Rational& a_min, const Rational& a_max,
                                     const Rational& b_min, const Rational& b_max,
                                     int s);

// For an independent set I: sum of degrees over I <= e <= sum over V - I.
struct DegreeSandwich {
    long long lower = 0;
    long long e = 0;
    long long upper = 0;
    bool tight_lower = false;
    bool tight_upper = false;
};

// Throws std::invalid_argument when I contains out-of-range bits or is not
// independent.
DegreeSandwich degree_sandwich(const Graph& g, VertexSet independent_set);

}  // namespace zagreb
