#pragma once

#include <string>
#include <vector>

#include "delpezzo/field.hpp"

namespace dp {

/// Divisor class on the blow-up of the plane in r points, written in the
/// basis H, E_1, ..., E_r. c[0] is the H coefficient.
struct DivisorClass {
    int r = 0;
    std::vector<int> c;

    DivisorClass() = default;
    DivisorClass(int r_, std::vector<int> coeffs);

    int h() const { return c[0]; }
    int e(int i) const { return c[i]; }  // 1-based

    bool operator==(const DivisorClass& o) const { return r == o.r && c == o.c; }
    bool operator!=(const DivisorClass& o) const { return !(*this == o); }
    bool operator<(const DivisorClass& o) const;  // lex on coefficients

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;

    std::string to_string() const;  // "3H-E1-E2-...-2E8" style
};

/// Intersection pairing: H^2 = 1, E_i^2 = -1, mixed products 0.
long intersection(const DivisorClass& a, const DivisorClass& b);

DivisorClass anticanonical(int r);

enum class CurveFamily { Exceptional, Line, Conic, Cubic, Quartic, Quintic, Sextic };

/// An irreducible curve C with C^2 = -1 and C.(-K) = 1. idx lists the
/// 1-based points that pin the family member down:
///   Exceptional: {i}           the blown-up point
///   Line:        {i, j}        the two points it passes through
///   Conic:       complement    the points it misses (empty for r = 5)
///   Cubic:       {i} or {i, j} double point, then (r = 8) the missed point
///   Quartic:     {i, j, k}     the three double points
///   Quintic:     {i, j}        the two simple points, the rest double
///   Sextic:      {i}           the triple point, the rest double
struct NegativeCurve {
    CurveFamily family;
    std::vector<int> idx;
    DivisorClass cls;

    std::string label() const;  // "E3", "m15", "Q24", "C1", "V123", ...
};

/// All negative curves on S_r in canonical order: exceptional curves, lines,
/// conics, cubics, quartics, quintics, sextics, each family ordered by idx.
std::vector<NegativeCurve> enumerate_negative_curves(int r);

/// A Cox ring generator: a negative curve, or for r = 8 one of the two
/// anticanonical sections kappa_1, kappa_2. id indexes the canonical list.
struct Generator {
    int id = 0;
    bool kappa = false;
    int kappa_index = 0;  // 1 or 2 when kappa
    NegativeCurve curve;  // valid when !kappa
    DivisorClass cls;

    std::string label() const;
};

std::vector<Generator> generators(int r);

/// Simple reflections generating the Weyl group action on Pic(S_r):
/// permutation roots E_i - E_{i+1} and the quadratic root H - E_1 - E_2 - E_3.
struct WeylReflection {
    DivisorClass root;
    DivisorClass apply(const DivisorClass& d) const;
};

std::vector<WeylReflection> weyl_generators(int r);

/// Orbit closure under the given reflections, breadth-first.
std::vector<DivisorClass> weyl_orbit(const DivisorClass& start,
                                     const std::vector<WeylReflection>& gens);

bool is_nef(const DivisorClass& d, const std::vector<NegativeCurve>& curves);

/// Sections of a nef class: D.(D - K)/2 + 1. Throws if d is not nef.
long h0_nef(const DivisorClass& d, const std::vector<NegativeCurve>& curves);

}  // namespace dp
