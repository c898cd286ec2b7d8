#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "delpezzo/plane.hpp"
#include "delpezzo/rulings.hpp"

namespace dp {

struct DegeneracyError : Error {
    DegeneracyError(const DivisorClass& cls, std::size_t expected, std::size_t got)
        : Error("ruling " + cls.to_string() + " has product rank " + std::to_string(got) +
                ", expected " + std::to_string(expected)),
          ruling_class(cls),
          expected_rank(expected),
          measured_rank(got) {}

    DivisorClass ruling_class;
    std::size_t expected_rank;
    std::size_t measured_rank;
};

/// Plane forms realizing every Cox ring generator, parallel to
/// generators(cfg.r). For r = 8 the last two entries are the cubic pencil.
template <class K>
std::vector<PlaneForm<K>> generator_forms(const PointConfiguration<K>& cfg) {
    std::vector<PlaneForm<K>> forms;
    for (const auto& nc : enumerate_negative_curves(cfg.r))
        forms.push_back(curve_form(nc, cfg));
    if (cfg.r == 8) {
        auto [k1, k2] = cubic_pencil(cfg);
        forms.push_back(std::move(k1));
        forms.push_back(std::move(k2));
    }
    return forms;
}

/// Coefficient matrix of the ruling's monomials: row t holds the plane form
/// realizing monomial t (the product of its two generator forms).
template <class K>
Mat<K> product_matrix(const K& k, const Ruling& rl,
                      const std::vector<PlaneForm<K>>& forms) {
    Mat<K> m;
    m.reserve(rl.monomials.size());
    for (const auto& mono : rl.monomials)
        m.push_back(multiply(k, forms[mono.a], forms[mono.b]).coeffs);
    return m;
}

/// The quadratic relations supported on one ruling, as the reduced echelon
/// kernel of the product matrix. The matrix must have rank exactly n + 1,
/// the dimension of the sections of the ruling class; anything else means
/// the points are degenerate.
template <class K>
Mat<K> relations_for_ruling(const K& k, const Ruling& rl,
                            const std::vector<PlaneForm<K>>& forms) {
    auto m = product_matrix(k, rl, forms);
    std::size_t expected = static_cast<std::size_t>(rl.n) + 1;
    auto kernel = left_kernel_rref(k, m);
    if (rl.monomials.size() - kernel.size() != expected)
        throw DegeneracyError(rl.cls, expected, rl.monomials.size() - kernel.size());
    return kernel;
}

template <class K>
struct RulingRelations {
    Ruling ruling;
    Mat<K> kernel;  // one row per relation, columns parallel to ruling.monomials
};

template <class K>
struct RelationSet {
    int r = 0;
    std::vector<RulingRelations<K>> blocks;

    std::size_t total() const {
        std::size_t n = 0;
        for (const auto& b : blocks) n += b.kernel.size();
        return n;
    }
};

/// Every quadratic relation of Cox(S_r): all rulings, n ascending then class
/// order. Requires 4 <= r <= 8 and a validated point configuration.
template <class K>
RelationSet<K> full_ideal(const PointConfiguration<K>& cfg) {
    if (cfg.r < 4 || cfg.r > 8) throw Error("relations need 4 <= r <= 8");
    const K& k = cfg.field;
    auto forms = generator_forms(cfg);
    RelationSet<K> out;
    out.r = cfg.r;
    for (int n = 1; n <= 3; ++n)
        for (auto& rl : enumerate_rulings(cfg.r, n)) {
            RulingRelations<K> block;
            block.kernel = relations_for_ruling(k, rl, forms);
            block.ruling = std::move(rl);
            out.blocks.push_back(std::move(block));
        }
    return out;
}

/// Membership of a candidate relation in the span of the computed ones.
/// Equivalent formulation: the candidate annihilates the product matrix.
template <class K>
bool span_contains(const K& k, const Ruling& rl, const Vec<K>& candidate,
                   const std::vector<PlaneForm<K>>& forms) {
    if (candidate.size() != rl.monomials.size())
        throw Error("candidate length does not match the ruling's monomials");
    auto m = product_matrix(k, rl, forms);
    for (std::size_t col = 0; col < m[0].size(); ++col) {
        auto s = k.zero();
        for (std::size_t t = 0; t < m.size(); ++t)
            s = k.add(s, k.mul(candidate[t], m[t][col]));
        if (!k.is_zero(s)) return false;
    }
    return true;
}

template <class K>
bool span_contains(const Ruling& rl, const Vec<K>& candidate,
                   const PointConfiguration<K>& cfg) {
    return span_contains(cfg.field, rl, candidate, generator_forms(cfg));
}

/// Value of one relation at a point of Spec R_r given by generator values.
template <class K>
typename K::Elem evaluate_relation(const K& k, const Ruling& rl, const Vec<K>& coeffs,
                                   const Vec<K>& xi) {
    auto s = k.zero();
    for (std::size_t t = 0; t < rl.monomials.size(); ++t)
        s = k.add(s, k.mul(coeffs[t], k.mul(xi[rl.monomials[t].a], xi[rl.monomials[t].b])));
    return s;
}

}  // namespace dp
