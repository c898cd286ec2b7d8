#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "delpezzo/relations.hpp"
#include "delpezzo/verify.hpp"

namespace dp {

/// One classical relation: a ruling named by a curve (its class is -K minus
/// the curve's class for r = 6, H - E_3 for the r = 8 block) and three
/// coefficient terms over the configuration parameters.
struct GoldenTerm {
    std::string coeff;
    std::string g1;
    std::string g2;
};

struct GoldenLine {
    std::string label;
    std::vector<GoldenTerm> terms;
};

const std::vector<GoldenLine>& golden_r6_lines();  // 81 relations, parameters a, b, c, d, E, F
const std::vector<GoldenLine>& golden_r8_lines();  // 5 relations, parameters a1..a4

struct GoldenCheck {
    int line = 0;
    std::string label;
    bool pass = false;
};

/// Arithmetic over K on expressions in named variables:
/// sums, differences, products, quotients, parentheses, unary minus.
template <class K>
class ExpressionEvaluator {
public:
    ExpressionEvaluator(const K& k, const std::map<std::string, typename K::Elem>& vars)
        : k_(k), vars_(vars) {}

    typename K::Elem eval(std::string_view s) const {
        std::size_t pos = 0;
        auto v = expr(s, pos);
        skip(s, pos);
        if (pos != s.size()) throw Error("trailing input in expression '" + std::string(s) + "'");
        return v;
    }

private:
    static void skip(std::string_view s, std::size_t& pos) {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }

    typename K::Elem expr(std::string_view s, std::size_t& pos) const {
        auto v = term(s, pos);
        while (true) {
            skip(s, pos);
            if (pos < s.size() && s[pos] == '+') {
                ++pos;
                v = k_.add(v, term(s, pos));
            } else if (pos < s.size() && s[pos] == '-') {
                ++pos;
                v = k_.sub(v, term(s, pos));
            } else {
                return v;
            }
        }
    }

    typename K::Elem term(std::string_view s, std::size_t& pos) const {
        auto v = factor(s, pos);
        while (true) {
            skip(s, pos);
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                v = k_.mul(v, factor(s, pos));
            } else if (pos < s.size() && s[pos] == '/') {
                ++pos;
                v = k_.div(v, factor(s, pos));
            } else {
                return v;
            }
        }
    }

    typename K::Elem factor(std::string_view s, std::size_t& pos) const {
        skip(s, pos);
        if (pos >= s.size()) throw Error("truncated expression '" + std::string(s) + "'");
        if (s[pos] == '-') {
            ++pos;
            return k_.neg(factor(s, pos));
        }
        if (s[pos] == '(') {
            ++pos;
            auto v = expr(s, pos);
            skip(s, pos);
            if (pos >= s.size() || s[pos] != ')')
                throw Error("unbalanced parentheses in '" + std::string(s) + "'");
            ++pos;
            return v;
        }
        if (s[pos] >= '0' && s[pos] <= '9') {
            long n = 0;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9')
                n = n * 10 + (s[pos++] - '0');
            return k_.from_long(n);
        }
        if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
            std::string name;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos]))))
                name += s[pos++];
            auto it = vars_.find(name);
            if (it == vars_.end()) throw Error("unknown variable '" + name + "'");
            return it->second;
        }
        throw Error("unexpected character in expression '" + std::string(s) + "'");
    }

    const K& k_;
    const std::map<std::string, typename K::Elem>& vars_;
};

namespace detail {

template <class K>
std::size_t monomial_position(const Ruling& rl, int a, int b) {
    Monomial key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(rl.monomials.begin(), rl.monomials.end(), key);
    if (it == rl.monomials.end() || !(*it == key))
        throw Error("monomial is not supported on the ruling");
    return static_cast<std::size_t>(it - rl.monomials.begin());
}

}  // namespace detail

/// Checks each classical r = 6 relation for membership in the computed
/// relation space of its ruling. The table is written in the determinant
/// normalization, so every coefficient is rescaled by the frame units of
/// its two generators before the comparison.
template <class K>
std::vector<GoldenCheck> check_golden_r6(const PointConfiguration<K>& cfg) {
    if (cfg.r != 6) throw Error("the classical table is for r = 6");
    const K& k = cfg.field;
    auto a = cfg.pts[4][1], b = cfg.pts[4][2];
    auto c = cfg.pts[5][1], d = cfg.pts[5][2];
    auto one = k.one();
    std::map<std::string, typename K::Elem> vars;
    vars["a"] = a;
    vars["b"] = b;
    vars["c"] = c;
    vars["d"] = d;
    vars["E"] = k.sub(k.mul(k.sub(b, one), k.sub(c, one)), k.mul(k.sub(a, one), k.sub(d, one)));
    vars["F"] = k.sub(k.mul(b, c), k.mul(a, d));
    for (const char* name : {"b", "d", "E"})
        if (k.is_zero(vars.at(name)))
            throw Error(std::string("table parameter ") + name + " vanishes");
    for (auto [expr, what] : {std::pair{"a-c", "a-c"}, {"c-1", "c-1"}, {"a-1", "a-1"}})
        if (k.is_zero(ExpressionEvaluator<K>(k, vars).eval(expr)))
            throw Error(std::string("table parameter ") + what + " vanishes");

    auto gens = generators(6);
    auto forms = generator_forms(cfg);
    auto id = detail::label_to_id<K>(6);
    std::map<std::string, typename K::Elem> unit;
    std::map<std::string, DivisorClass> cls;
    for (const auto& g : gens) {
        unit[g.label()] = paper_frame_unit(cfg, g.curve);
        cls[g.label()] = g.cls;
    }
    std::map<DivisorClass, Ruling> by_class;
    for (auto& rl : enumerate_rulings(6, 1)) {
        auto key = rl.cls;
        by_class[key] = std::move(rl);
    }

    ExpressionEvaluator<K> ev(k, vars);
    std::vector<GoldenCheck> out;
    int line = 0;
    for (const auto& gl : golden_r6_lines()) {
        ++line;
        const auto& rl = by_class.at(anticanonical(6) - cls.at(gl.label));
        Vec<K> candidate(rl.monomials.size(), k.zero());
        for (const auto& t : gl.terms) {
            auto v = k.mul(ev.eval(t.coeff), k.mul(unit.at(t.g1), unit.at(t.g2)));
            auto pos = detail::monomial_position<K>(rl, id.at(t.g1), id.at(t.g2));
            candidate[pos] = k.add(candidate[pos], v);
        }
        out.push_back({line, gl.label, span_contains(k, rl, candidate, forms)});
    }
    return out;
}

/// The five classical relations on the r = 8 ruling H - E_3. These are
/// written against lead-1 forms already, so no rescaling is involved.
template <class K>
std::vector<GoldenCheck> check_golden_r8(const PointConfiguration<K>& cfg) {
    if (cfg.r != 8) throw Error("the five-relation block is for r = 8");
    const K& k = cfg.field;
    std::map<std::string, typename K::Elem> vars;
    for (int i = 0; i < 4; ++i) vars["a" + std::to_string(i + 1)] = cfg.pts[4 + i][1];
    if (k.is_zero(k.sub(vars.at("a3"), vars.at("a4"))))
        throw Error("points 7 and 8 share their second coordinate");

    auto forms = generator_forms(cfg);
    auto id = detail::label_to_id<K>(8);
    std::map<DivisorClass, Ruling> by_class;
    for (auto& rl : enumerate_rulings(8, 1)) {
        auto key = rl.cls;
        by_class[key] = std::move(rl);
    }
    std::vector<int> he3(9, 0);
    he3[0] = 1;
    he3[3] = -1;
    const auto& rl = by_class.at(DivisorClass(8, he3));

    ExpressionEvaluator<K> ev(k, vars);
    std::vector<GoldenCheck> out;
    int line = 0;
    for (const auto& gl : golden_r8_lines()) {
        ++line;
        Vec<K> candidate(rl.monomials.size(), k.zero());
        for (const auto& t : gl.terms) {
            auto pos = detail::monomial_position<K>(rl, id.at(t.g1), id.at(t.g2));
            candidate[pos] = k.add(candidate[pos], ev.eval(t.coeff));
        }
        out.push_back({line, gl.label, span_contains(k, rl, candidate, forms)});
    }
    return out;
}

}  // namespace dp
