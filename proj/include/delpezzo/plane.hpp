#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delpezzo/linalg.hpp"
#include "delpezzo/picard.hpp"

namespace dp {

/// Exponent triples of degree d in x, y, z, descending lexicographic order.
/// Form coefficient vectors are always parallel to this list.
inline std::vector<std::array<int, 3>> monomial_exponents(int degree) {
    std::vector<std::array<int, 3>> out;
    for (int e0 = degree; e0 >= 0; --e0)
        for (int e1 = degree - e0; e1 >= 0; --e1)
            out.push_back({e0, e1, degree - e0 - e1});
    return out;
}

inline std::size_t monomial_index(int degree, const std::array<int, 3>& e) {
    auto list = monomial_exponents(degree);
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == e) return i;
    throw Error("exponent triple out of range");
}

template <class K>
struct PlaneForm {
    int degree = 0;
    Vec<K> coeffs;
};

/// Points in the plane over K. The first four are frozen to
/// (1:0:0), (0:1:0), (0:0:1), (1:1:1); later points are (1:a:b) with
/// a, b nonzero. Coordinates are stored exactly as given.
template <class K>
struct PointConfiguration {
    K field;
    int r = 0;
    std::vector<std::array<typename K::Elem, 3>> pts;

    /// params holds (a_5, b_5, a_6, b_6, ...): two entries per point past
    /// the fourth.
    static PointConfiguration standard(const K& k, int r, const Vec<K>& params) {
        if (r < 0 || r > 8) throw Error("r out of range");
        if (r > 4 && params.size() != static_cast<std::size_t>(2 * (r - 4)))
            throw Error("expected " + std::to_string(2 * (r - 4)) + " parameters");
        PointConfiguration cfg{k, r, {}};
        const auto z = k.zero(), o = k.one();
        std::vector<std::array<typename K::Elem, 3>> base = {
            {o, z, z}, {z, o, z}, {z, z, o}, {o, o, o}};
        for (int i = 0; i < std::min(r, 4); ++i) cfg.pts.push_back(base[i]);
        for (int j = 4; j < r; ++j) {
            auto a = params[2 * (j - 4)], b = params[2 * (j - 4) + 1];
            if (k.is_zero(a) || k.is_zero(b))
                throw Error("point " + std::to_string(j + 1) + " has a zero coordinate");
            cfg.pts.push_back({o, a, b});
        }
        return cfg;
    }

    /// Validates explicitly given coordinates against the normalization.
    static PointConfiguration from_points(
        const K& k, std::vector<std::array<typename K::Elem, 3>> points) {
        int r = static_cast<int>(points.size());
        if (r > 8) throw Error("at most eight points");
        PointConfiguration cfg{k, r, std::move(points)};
        auto std_cfg = standard(k, std::min(r, 4), {});
        for (int i = 0; i < std::min(r, 4); ++i)
            for (int c = 0; c < 3; ++c)
                if (!k.eq(cfg.pts[i][c], std_cfg.pts[i][c]))
                    throw Error("point " + std::to_string(i + 1) + " must be the standard frame point");
        for (int j = 4; j < r; ++j) {
            if (!k.eq(cfg.pts[j][0], k.one()))
                throw Error("point " + std::to_string(j + 1) + " must have first coordinate 1");
            if (k.is_zero(cfg.pts[j][1]) || k.is_zero(cfg.pts[j][2]))
                throw Error("point " + std::to_string(j + 1) + " has a zero coordinate");
        }
        return cfg;
    }
};

template <class K>
typename K::Elem evaluate(const K& k, const PlaneForm<K>& f,
                          const std::array<typename K::Elem, 3>& pt) {
    auto exps = monomial_exponents(f.degree);
    auto total = k.zero();
    for (std::size_t m = 0; m < exps.size(); ++m) {
        if (k.is_zero(f.coeffs[m])) continue;
        auto term = f.coeffs[m];
        for (int v = 0; v < 3; ++v)
            for (int e = 0; e < exps[m][v]; ++e) term = k.mul(term, pt[v]);
        total = k.add(total, term);
    }
    return total;
}

namespace detail {

template <class K>
typename K::Elem power(const K& k, const typename K::Elem& x, int e) {
    auto r = k.one();
    for (int i = 0; i < e; ++i) r = k.mul(r, x);
    return r;
}

/// Row of monomial values at pt, after applying d/dx_{v} for each v in ds.
template <class K>
Vec<K> condition_row(const K& k, int degree,
                     const std::array<typename K::Elem, 3>& pt,
                     const std::vector<int>& ds) {
    auto exps = monomial_exponents(degree);
    Vec<K> row;
    row.reserve(exps.size());
    for (auto e : exps) {
        long scale = 1;
        bool dead = false;
        for (int v : ds) {
            if (e[v] == 0) { dead = true; break; }
            scale *= e[v];
            e[v] -= 1;
        }
        if (dead) { row.push_back(k.zero()); continue; }
        auto val = k.from_long(scale);
        for (int v = 0; v < 3; ++v) val = k.mul(val, power(k, pt[v], e[v]));
        row.push_back(val);
    }
    return row;
}

template <class K>
void append_point_conditions(const K& k, Mat<K>& rows, int degree,
                             const std::array<typename K::Elem, 3>& pt, int mult) {
    if (mult == 1) {
        rows.push_back(condition_row(k, degree, pt, {}));
    } else if (mult == 2) {
        for (int v = 0; v < 3; ++v) rows.push_back(condition_row(k, degree, pt, {v}));
    } else if (mult == 3) {
        for (int v = 0; v < 3; ++v)
            for (int w = v; w < 3; ++w) rows.push_back(condition_row(k, degree, pt, {v, w}));
    } else if (mult != 0) {
        throw Error("unsupported multiplicity");
    }
}

}  // namespace detail

struct PositionWitness {
    enum Kind { Collinear, ConicThroughSix, CubicDoublePoint };
    Kind kind;
    std::vector<int> indices;  // 1-based points

    std::string describe() const {
        std::string what;
        switch (kind) {
            case Collinear: what = "collinear"; break;
            case ConicThroughSix: what = "conic_through_six"; break;
            case CubicDoublePoint: what = "cubic_double_point_degenerate"; break;
        }
        std::string s = "{\"condition\":\"" + what + "\",\"points\":[";
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(indices[i]);
        }
        return s + "]}";
    }
};

/// Checks the position constraints the curve constructions rely on: no three
/// points collinear, no six on a conic, and for r = 8 no degenerate net of
/// cubics with a double point. Returns a witness for the first failure.
template <class K>
std::optional<PositionWitness> validate_general_position(const PointConfiguration<K>& cfg) {
    const K& k = cfg.field;
    const int r = cfg.r;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            for (int l = j + 1; l < r; ++l) {
                Mat<K> m{{cfg.pts[i][0], cfg.pts[i][1], cfg.pts[i][2]},
                         {cfg.pts[j][0], cfg.pts[j][1], cfg.pts[j][2]},
                         {cfg.pts[l][0], cfg.pts[l][1], cfg.pts[l][2]}};
                if (k.is_zero(det(k, m)))
                    return PositionWitness{PositionWitness::Collinear, {i + 1, j + 1, l + 1}};
            }
    if (r >= 6) {
        std::vector<int> pick(6);
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b)
                for (int c = b + 1; c < r; ++c)
                    for (int d = c + 1; d < r; ++d)
                        for (int e = d + 1; e < r; ++e)
                            for (int f = e + 1; f < r; ++f) {
                                pick = {a, b, c, d, e, f};
                                Mat<K> m;
                                for (int idx : pick)
                                    m.push_back(detail::condition_row(k, 2, cfg.pts[idx], {}));
                                if (rank(k, m) < 6) {
                                    PositionWitness w{PositionWitness::ConicThroughSix, {}};
                                    for (int idx : pick) w.indices.push_back(idx + 1);
                                    return w;
                                }
                            }
    }
    if (r == 8) {
        for (int i = 0; i < 8; ++i) {
            Mat<K> m;
            for (int j = 0; j < 8; ++j)
                if (j != i) m.push_back(detail::condition_row(k, 3, cfg.pts[j], {}));
            for (int v = 0; v < 3; ++v)
                m.push_back(detail::condition_row(k, 3, cfg.pts[i], {v}));
            if (k.is_zero(det(k, m)))
                return PositionWitness{PositionWitness::CubicDoublePoint, {i + 1}};
        }
    }
    return std::nullopt;
}

/// Point multiplicities a negative curve imposes: the E_i coefficients of
/// its class, negated.
inline std::vector<int> curve_multiplicities(const NegativeCurve& nc) {
    std::vector<int> m;
    for (int i = 1; i <= nc.cls.r; ++i) m.push_back(-nc.cls.e(i));
    return m;
}

/// The unique plane curve realizing a negative curve class, normalized so
/// its first nonzero coefficient (descending lex) is 1. Exceptional classes
/// give the constant form 1. Throws if the interpolation space is not a
/// line, which means the points are in special position.
template <class K>
PlaneForm<K> curve_form(const NegativeCurve& nc, const PointConfiguration<K>& cfg) {
    const K& k = cfg.field;
    int degree = nc.cls.h();
    if (degree == 0) return {0, {k.one()}};
    auto mult = curve_multiplicities(nc);
    Mat<K> rows;
    for (int j = 0; j < cfg.r; ++j)
        detail::append_point_conditions(k, rows, degree, cfg.pts[j], mult[j]);
    auto basis = kernel_rref(k, rows);
    if (basis.size() != 1)
        throw Error("curve " + nc.label() + " is not unique for these points");
    auto& v = basis[0];
    std::size_t lead = 0;
    while (lead < v.size() && k.is_zero(v[lead])) ++lead;
    auto scale = k.inv(v[lead]);
    for (auto& c : v) c = k.mul(c, scale);
    return {degree, std::move(v)};
}

/// Basis of the cubics through all eight points, in reduced echelon form
/// with respect to descending lex monomials. Requires r = 8.
template <class K>
std::pair<PlaneForm<K>, PlaneForm<K>> cubic_pencil(const PointConfiguration<K>& cfg) {
    if (cfg.r != 8) throw Error("cubic pencil needs eight points");
    const K& k = cfg.field;
    Mat<K> rows;
    for (int j = 0; j < 8; ++j)
        rows.push_back(detail::condition_row(k, 3, cfg.pts[j], {}));
    auto basis = kernel_rref(k, rows);
    if (basis.size() != 2)
        throw Error("cubics through the eight points do not form a pencil");
    return {PlaneForm<K>{3, basis[0]}, PlaneForm<K>{3, basis[1]}};
}

template <class K>
PlaneForm<K> multiply(const K& k, const PlaneForm<K>& f, const PlaneForm<K>& g) {
    int degree = f.degree + g.degree;
    auto fe = monomial_exponents(f.degree);
    auto ge = monomial_exponents(g.degree);
    std::map<std::array<int, 3>, std::size_t> where;
    auto pe = monomial_exponents(degree);
    for (std::size_t i = 0; i < pe.size(); ++i) where[pe[i]] = i;
    PlaneForm<K> out{degree, Vec<K>(pe.size(), k.zero())};
    for (std::size_t i = 0; i < fe.size(); ++i) {
        if (k.is_zero(f.coeffs[i])) continue;
        for (std::size_t j = 0; j < ge.size(); ++j) {
            if (k.is_zero(g.coeffs[j])) continue;
            std::array<int, 3> e{fe[i][0] + ge[j][0], fe[i][1] + ge[j][1],
                                 fe[i][2] + ge[j][2]};
            auto& slot = out.coeffs[where[e]];
            slot = k.add(slot, k.mul(f.coeffs[i], g.coeffs[j]));
        }
    }
    return out;
}

}  // namespace dp
