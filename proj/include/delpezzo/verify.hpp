#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "delpezzo/relations.hpp"

namespace dp {

/// A point of Spec R_r: one value per Cox ring generator.
template <class K>
struct Valuation {
    int r = 0;
    Vec<K> xi;
};

struct RankReport {
    std::size_t relations = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::size_t nonzero_residuals = 0;
};

/// Rank of the Jacobian of the relation set at a point, together with the
/// number of relations the point fails to satisfy. n_filter restricts to
/// blocks of one ruling index.
template <class K>
RankReport jacobian_rank(const K& k, const RelationSet<K>& rs, const Valuation<K>& val,
                         std::optional<int> n_filter = {}) {
    const auto& xi = val.xi;
    RankReport rep;
    rep.cols = xi.size();
    RankAccumulator<K> acc(k, xi.size());
    for (const auto& block : rs.blocks) {
        if (n_filter && block.ruling.n != *n_filter) continue;
        for (const auto& row : block.kernel) {
            ++rep.relations;
            if (!k.is_zero(evaluate_relation(k, block.ruling, row, xi)))
                ++rep.nonzero_residuals;
            Vec<K> grad(xi.size(), k.zero());
            for (std::size_t t = 0; t < block.ruling.monomials.size(); ++t) {
                auto [a, b] = block.ruling.monomials[t];
                if (k.is_zero(row[t])) continue;
                grad[a] = k.add(grad[a], k.mul(row[t], xi[b]));
                grad[b] = k.add(grad[b], k.mul(row[t], xi[a]));
            }
            acc.add(std::move(grad));
        }
    }
    rep.rank = acc.rank();
    return rep;
}

/// Determinant-normalized forms: the line as det of (x, y, z; p_i; p_j),
/// the conic through five points as the bordered determinant whose first
/// row is the degree-2 monomial vector. These differ from the library's
/// lead-1 normalization by the nonzero factor paper_frame_unit.
template <class K>
PlaneForm<K> det_line_form(const PointConfiguration<K>& cfg, int i, int j) {
    const K& k = cfg.field;
    const auto& p = cfg.pts[i - 1];
    const auto& q = cfg.pts[j - 1];
    auto minor = [&](int c0, int c1) {
        return k.sub(k.mul(p[c0], q[c1]), k.mul(p[c1], q[c0]));
    };
    return {1, {minor(1, 2), k.neg(minor(0, 2)), minor(0, 1)}};
}

template <class K>
PlaneForm<K> det_conic_form(const PointConfiguration<K>& cfg, const std::vector<int>& through) {
    const K& k = cfg.field;
    if (through.size() != 5) throw Error("conic determinant needs five points");
    Mat<K> rows;
    for (int idx : through) rows.push_back(detail::condition_row(k, 2, cfg.pts[idx - 1], {}));
    Vec<K> coeffs(6);
    for (int col = 0; col < 6; ++col) {
        Mat<K> minor;
        for (const auto& r : rows) {
            Vec<K> m;
            for (int c = 0; c < 6; ++c)
                if (c != col) m.push_back(r[c]);
            minor.push_back(std::move(m));
        }
        auto d = det(k, minor);
        coeffs[col] = (col % 2 == 0) ? d : k.neg(d);
    }
    return {2, std::move(coeffs)};
}

/// Ratio between the determinant normalization of a curve and the lead-1
/// form: the first nonzero coefficient of the determinant form.
template <class K>
typename K::Elem paper_frame_unit(const PointConfiguration<K>& cfg, const NegativeCurve& nc) {
    const K& k = cfg.field;
    PlaneForm<K> f;
    switch (nc.family) {
        case CurveFamily::Exceptional:
            return k.one();
        case CurveFamily::Line:
            f = det_line_form(cfg, nc.idx[0], nc.idx[1]);
            break;
        case CurveFamily::Conic: {
            std::vector<int> through;
            for (int i = 1; i <= cfg.r; ++i)
                if (std::find(nc.idx.begin(), nc.idx.end(), i) == nc.idx.end())
                    through.push_back(i);
            f = det_conic_form(cfg, through);
            break;
        }
        default:
            throw Error("no determinant normalization for " + nc.label());
    }
    for (const auto& c : f.coeffs)
        if (!k.is_zero(c)) return c;
    throw Error("degenerate determinant form for " + nc.label());
}

namespace detail {

template <class K>
std::map<std::string, int> label_to_id(int r) {
    std::map<std::string, int> out;
    for (const auto& g : generators(r)) out[g.label()] = g.id;
    return out;
}

}  // namespace detail

/// A point satisfying every quadratic relation, with all coordinates off a
/// small support equal to zero. Defined for r = 6 and r = 8; the Jacobian
/// there has corank r + 3, so the point is smooth on the affine cone.
template <class K>
Valuation<K> smooth_point(const PointConfiguration<K>& cfg) {
    const K& k = cfg.field;
    auto gens = generators(cfg.r);
    auto id = detail::label_to_id<K>(cfg.r);
    Valuation<K> val;
    val.r = cfg.r;
    val.xi.assign(gens.size(), k.zero());
    if (cfg.r == 6) {
        auto a = cfg.pts[4][1], b = cfg.pts[4][2];
        auto c = cfg.pts[5][1], d = cfg.pts[5][2];
        // determinant-frame values, divided back into the lead-1 frame
        std::map<std::string, typename K::Elem> v;
        v["E5"] = k.mul(a, k.sub(b, k.one()));
        v["E6"] = k.mul(c, k.sub(d, k.one()));
        v["m12"] = k.one();
        v["m14"] = k.neg(k.one());
        v["m23"] = k.one();
        v["m34"] = k.one();
        v["Q5"] = k.one();
        v["Q6"] = k.one();
        std::map<std::string, const NegativeCurve*> curves;
        for (const auto& g : gens)
            if (!g.kappa) curves[g.label()] = &g.curve;
        for (const auto& [label, value] : v)
            val.xi[id.at(label)] = k.div(value, paper_frame_unit(cfg, *curves.at(label)));
        return val;
    }
    if (cfg.r == 8) {
        auto a1 = cfg.pts[4][1], a2 = cfg.pts[5][1], a3 = cfg.pts[6][1], a4 = cfg.pts[7][1];
        auto alpha = k.sub(a4, a3);
        if (k.is_zero(alpha)) throw Error("points 7 and 8 share their second coordinate");
        for (const char* label : {"E8", "m13", "m23", "m34", "m35", "m36", "m38"})
            val.xi[id.at(label)] = k.one();
        val.xi[id.at("E1")] = k.div(k.mul(a3, a4), alpha);
        val.xi[id.at("E2")] = k.div(a4, alpha);
        val.xi[id.at("E4")] = k.div(k.mul(k.sub(k.one(), a3), a4), alpha);
        val.xi[id.at("E5")] = k.div(k.mul(k.sub(a1, a3), a4), k.mul(a1, alpha));
        val.xi[id.at("E6")] = k.div(k.mul(k.sub(a2, a3), a4), k.mul(a2, alpha));
        return val;
    }
    throw Error("smooth point construction covers r = 6 and r = 8 only");
}

/// The singular point of the cone for r = 7: xi(E_1) = xi(C_1) = 1, zero
/// elsewhere. It satisfies every relation from the (1)-rulings but none
/// from the (2)-ruling, and the Jacobian of the former drops rank there.
template <class K>
Valuation<K> singular_witness_r7(const K& k) {
    auto id = detail::label_to_id<K>(7);
    Valuation<K> val;
    val.r = 7;
    val.xi.assign(56, k.zero());
    val.xi[id.at("E1")] = k.one();
    val.xi[id.at("C1")] = k.one();
    return val;
}

template <class K>
struct PropagationResult {
    Valuation<K> valuation;
    std::size_t nonzero_residuals = 0;  // over the full relation set
};

/// Reconstructs a full point from xi(D) != 0 and the values on the curves
/// not meeting D, walking rulings in order of intersection with D. Per
/// intersection theory every step has exactly the scheduled unknowns; a
/// missing pivot or leftover unknown throws.
template <class K>
PropagationResult<K> propagate_dependence(const K& k, const RelationSet<K>& rs,
                                          int d_id,
                                          const std::map<int, typename K::Elem>& known) {
    int r = rs.r;
    if (r != 7 && r != 8) throw Error("dependence propagation covers r = 7 and r = 8");
    auto gens = generators(r);
    if (d_id < 0 || d_id >= static_cast<int>(gens.size()) || gens[d_id].kappa)
        throw Error("base generator must be a negative curve");
    auto it = known.find(d_id);
    if (it == known.end() || k.is_zero(it->second))
        throw Error("the base value xi(D) must be given and nonzero");
    const DivisorClass D = gens[d_id].cls;

    std::vector<std::optional<typename K::Elem>> xi(gens.size());
    std::vector<int> meet(gens.size(), 0);
    for (const auto& g : gens)
        meet[g.id] = g.kappa ? -9 : static_cast<int>(intersection(D, g.cls));
    for (const auto& [u, value] : known) {
        if (u != d_id && meet[u] != 0)
            throw Error("known values may cover only curves not meeting D");
        xi[u] = value;
    }
    for (const auto& g : gens)
        if (!g.kappa && meet[g.id] == 0 && !xi[g.id])
            throw Error("missing value for " + g.label());

    std::map<DivisorClass, const RulingRelations<K>*> by_class;
    for (const auto& b : rs.blocks) by_class[b.ruling.cls] = &b;

    // one linear solve: all monomials of the block known except those in cols
    auto solve = [&](const RulingRelations<K>& block, const std::vector<std::size_t>& cols) {
        const auto& monos = block.ruling.monomials;
        Mat<K> sys;
        for (const auto& row : block.kernel) {
            Vec<K> eq;
            for (auto c : cols) eq.push_back(row[c]);
            auto rhs = k.zero();
            for (std::size_t t = 0; t < monos.size(); ++t) {
                if (std::find(cols.begin(), cols.end(), t) != cols.end()) continue;
                if (k.is_zero(row[t])) continue;
                rhs = k.add(rhs, k.mul(row[t], k.mul(*xi[monos[t].a], *xi[monos[t].b])));
            }
            eq.push_back(k.neg(rhs));
            sys.push_back(std::move(eq));
        }
        auto pivots = rref(k, sys);
        if (pivots.size() != cols.size() ||
            pivots.back() == cols.size())  // rhs column became a pivot: inconsistent
            throw Error("ruling " + block.ruling.cls.to_string() +
                        " does not determine its unknowns");
        Vec<K> out;
        for (std::size_t i = 0; i < cols.size(); ++i) out.push_back(sys[i].back());
        return out;
    };

    auto resolve_product = [&](int u, const DivisorClass& ruling_cls) {
        auto bit = by_class.find(ruling_cls);
        if (bit == by_class.end())
            throw Error("no ruling of class " + ruling_cls.to_string());
        const auto& block = *bit->second;
        std::vector<std::size_t> cols;
        for (std::size_t t = 0; t < block.ruling.monomials.size(); ++t) {
            auto [a, b] = block.ruling.monomials[t];
            if (a == d_id || b == d_id) cols.push_back(t);
        }
        if (cols.size() != 1) throw Error("expected a single monomial through D");
        auto [a, b] = block.ruling.monomials[cols[0]];
        if (a != d_id && b != d_id) throw Error("monomial bookkeeping failure");
        auto solved = solve(block, cols);
        xi[u] = k.div(solved[0], *xi[d_id]);
    };

    for (const auto& g : gens)  // (1)-variables
        if (!g.kappa && meet[g.id] == 1) resolve_product(g.id, D + g.cls);

    if (r == 8) {  // kappa pair from the ruling of class -K + D
        auto bit = by_class.find(anticanonical(8) + D);
        if (bit == by_class.end()) throw Error("missing ruling -K+D");
        const auto& block = *bit->second;
        int k1 = static_cast<int>(gens.size()) - 2, k2 = k1 + 1;
        std::vector<std::size_t> cols;
        for (std::size_t t = 0; t < block.ruling.monomials.size(); ++t) {
            auto [a, b] = block.ruling.monomials[t];
            if (b == k1 || b == k2) {
                if (a != d_id) throw Error("kappa monomial not through D");
                cols.push_back(t);
            }
        }
        if (cols.size() != 2) throw Error("expected two kappa monomials");
        auto solved = solve(block, cols);
        xi[k1] = k.div(solved[0], *xi[d_id]);
        xi[k2] = k.div(solved[1], *xi[d_id]);
    }

    for (const auto& g : gens)  // (2)-variables
        if (!g.kappa && meet[g.id] == 2) resolve_product(g.id, D + g.cls);
    for (const auto& g : gens)  // the (3)-variable for r = 8
        if (!g.kappa && meet[g.id] == 3) resolve_product(g.id, D + g.cls);

    PropagationResult<K> out;
    out.valuation.r = r;
    for (const auto& v : xi) {
        if (!v) throw Error("propagation left a value undetermined");
        out.valuation.xi.push_back(*v);
    }
    for (const auto& block : rs.blocks)
        for (const auto& row : block.kernel)
            if (!k.is_zero(evaluate_relation(k, block.ruling, row, out.valuation.xi)))
                ++out.nonzero_residuals;
    return out;
}

/// Hilbert function of R_r/J_r in degree t, by counting monomials of degree
/// t modulo the multiples of the quadratic relations. Exact but only sized
/// for small t; the guard keeps accidental blow-ups out.
template <class K>
long hilbert_function(const K& k, const RelationSet<K>& rs, int t, int t_max = 3) {
    if (rs.r < 4 || rs.r > 7) throw Error("hilbert_function covers 4 <= r <= 7");
    if (t < 0 || t > t_max) throw Error("degree beyond the configured bound");
    long n = static_cast<long>(generators(rs.r).size());
    if (t == 0) return 1;
    if (t == 1) return n;

    // multisets of size t over n generators, in lex order
    std::vector<std::vector<int>> cols;
    std::vector<int> cur(t, 0);
    while (true) {
        cols.push_back(cur);
        int i = t - 1;
        while (i >= 0 && cur[i] == n - 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < t; ++j) cur[j] = cur[i];
    }
    std::map<std::vector<int>, long> col_index;
    for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = static_cast<long>(i);

    SparseRankAccumulator<K> acc(k);
    std::vector<std::vector<int>> pads;
    std::vector<int> pad(t - 2, 0);
    if (t == 2) {
        pads.push_back({});
    } else {
        while (true) {
            pads.push_back(pad);
            int i = t - 3;
            while (i >= 0 && pad[i] == n - 1) --i;
            if (i < 0) break;
            ++pad[i];
            for (int j = i + 1; j < t - 2; ++j) pad[j] = pad[i];
        }
    }
    for (const auto& block : rs.blocks) {
        for (const auto& row : block.kernel) {
            for (const auto& p : pads) {
                std::map<long, typename K::Elem> entries;
                for (std::size_t m = 0; m < block.ruling.monomials.size(); ++m) {
                    if (k.is_zero(row[m])) continue;
                    std::vector<int> key(p);
                    key.push_back(block.ruling.monomials[m].a);
                    key.push_back(block.ruling.monomials[m].b);
                    std::sort(key.begin(), key.end());
                    auto [it2, fresh] = entries.try_emplace(col_index.at(key), row[m]);
                    if (!fresh) it2->second = k.add(it2->second, row[m]);
                }
                typename SparseRankAccumulator<K>::Row sparse;
                for (auto& [c, v] : entries)
                    if (!k.is_zero(v)) sparse.emplace_back(c, std::move(v));
                if (!sparse.empty()) acc.add(std::move(sparse));
            }
        }
    }
    return static_cast<long>(cols.size()) - static_cast<long>(acc.rank());
}

/// The same dimension counted on the surface side: group the degree-t
/// products of generator classes and sum the section counts of the nef
/// parts. Independent of any relation computation.
inline long hilbert_oracle(int r, int t, int t_max = 3) {
    if (r < 1 || r > 7) throw Error("hilbert_oracle covers r <= 7");
    if (t < 0 || t > t_max) throw Error("degree beyond the configured bound");
    if (t == 0) return 1;
    auto gens = generators(r);
    auto curves = enumerate_negative_curves(r);
    std::set<DivisorClass> degrees;
    std::vector<int> pick(t, 0);
    while (true) {
        DivisorClass sum(r, std::vector<int>(r + 1, 0));
        for (int i : pick) sum = sum + gens[i].cls;
        degrees.insert(sum);
        int i = t - 1;
        while (i >= 0 && pick[i] == static_cast<int>(gens.size()) - 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < t; ++j) pick[j] = pick[i];
    }
    long total = 0;
    for (auto d : degrees) {
        for (int guard = 0;; ++guard) {
            if (guard > 100) throw Error("base locus stripping did not terminate");
            const NegativeCurve* bad = nullptr;
            for (const auto& nc : curves)
                if (intersection(d, nc.cls) < 0) { bad = &nc; break; }
            if (!bad) break;
            d = d - bad->cls;
        }
        total += h0_nef(d, curves);
    }
    return total;
}

/// A point on the variety: every generator form evaluated at one plane
/// point, redrawn until all coordinates are nonzero.
template <class K>
Valuation<K> sample_variety_point(const PointConfiguration<K>& cfg,
                                  const std::vector<PlaneForm<K>>& forms,
                                  std::uint64_t seed) {
    const K& k = cfg.field;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> draw(1, 999983);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::array<typename K::Elem, 3> s{k.from_long(draw(rng)), k.from_long(draw(rng)),
                                          k.from_long(draw(rng))};
        Valuation<K> val;
        val.r = cfg.r;
        bool ok = true;
        for (const auto& f : forms) {
            auto v = evaluate(k, f, s);
            if (k.is_zero(v)) { ok = false; break; }
            val.xi.push_back(std::move(v));
        }
        if (ok) return val;
    }
    throw Error("could not sample a point with all coordinates nonzero");
}

}  // namespace dp
