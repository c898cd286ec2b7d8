#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "delpezzo/picard.hpp"

namespace dp {

/// Degree-two monomial x_a x_b in Cox ring generators, by id, a <= b.
struct Monomial {
    int a = 0;
    int b = 0;

    bool operator==(const Monomial& o) const { return a == o.a && b == o.b; }
    bool operator<(const Monomial& o) const { return a != o.a ? a < o.a : b < o.b; }
};

/// An (n)-ruling: a class that splits as C + C' with C, C' negative curves
/// meeting with multiplicity n. monomials lists every unordered generator
/// pair whose classes sum to cls (for r = 8 this picks up the kappa pairs).
struct Ruling {
    DivisorClass cls;
    int n = 0;
    std::vector<Monomial> monomials;
};

/// All (n)-rulings of S_r, ordered by class vector. Requires 4 <= r <= 8.
std::vector<Ruling> enumerate_rulings(int r, int n);

/// Rulings grouped by coefficient shape (H degree plus the multiset of E
/// coefficients). Names write s for E_1 + ... + E_r and i, j, k, l for
/// distinct point indices. members indexes into enumerate_rulings(r, n).
struct RulingFamily {
    std::string name;
    std::vector<std::size_t> members;
};

std::vector<RulingFamily> ruling_families(int r, int n);

/// Incidence graph of the negative curves: an edge where C.C' = 1.
/// Vertices are indices into enumerate_negative_curves(r).
struct CurveGraph {
    std::size_t vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

CurveGraph dynkin_graph(int r);

/// Triples of pairwise meeting lines on the cubic surface (r = 6 only).
std::vector<std::array<int, 3>> triangles(int r);

}  // namespace dp
