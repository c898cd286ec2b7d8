#include "delpezzo/rulings.hpp"

#include <algorithm>
#include <map>

namespace dp {

std::vector<Ruling> enumerate_rulings(int r, int n) {
    if (r < 4 || r > 8) throw Error("ruling enumeration needs 4 <= r <= 8");
    if (n < 1) throw Error("ruling index n must be positive");
    auto gens = generators(r);
    auto curves = enumerate_negative_curves(r);

    std::map<DivisorClass, std::vector<Monomial>> by_class;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j)
            by_class[gens[i].cls + gens[j].cls].push_back(
                {static_cast<int>(i), static_cast<int>(j)});

    std::map<DivisorClass, bool> is_ruling;
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            if (intersection(curves[i].cls, curves[j].cls) == n)
                is_ruling[curves[i].cls + curves[j].cls] = true;

    std::vector<Ruling> out;
    for (const auto& [cls, dummy] : is_ruling) {
        Ruling rl;
        rl.cls = cls;
        rl.n = n;
        rl.monomials = by_class.at(cls);
        std::sort(rl.monomials.begin(), rl.monomials.end());
        out.push_back(std::move(rl));
    }
    return out;
}

namespace {

// H degree plus E coefficients sorted descending
std::vector<int> shape(const DivisorClass& d) {
    std::vector<int> s(d.c.begin() + 1, d.c.end());
    std::sort(s.begin(), s.end(), std::greater<int>());
    s.insert(s.begin(), d.c[0]);
    return s;
}

struct ShapeName {
    std::vector<int> sig;
    const char* name;
};

std::vector<ShapeName> shape_table(int r, int n) {
    if (n == 1) {
        switch (r) {
            case 4:
                return {{{1, 0, 0, 0, -1}, "H-Ei"},
                        {{2, -1, -1, -1, -1}, "2H-s"}};
            case 5:
                return {{{1, 0, 0, 0, 0, -1}, "H-Ei"},
                        {{2, 0, -1, -1, -1, -1}, "2H-s+Ei"}};
            case 6:
                return {{{1, 0, 0, 0, 0, 0, -1}, "-K-D"},
                        {{2, 0, 0, -1, -1, -1, -1}, "-K-D"},
                        {{3, -1, -1, -1, -1, -1, -2}, "-K-D"}};
            case 7:
                return {{{1, 0, 0, 0, 0, 0, 0, -1}, "H-Ei"},
                        {{2, 0, 0, 0, -1, -1, -1, -1}, "2H-s+Ei+Ej+Ek"},
                        {{3, 0, -1, -1, -1, -1, -1, -2}, "3H-s-Ei+Ej"},
                        {{4, -1, -1, -1, -1, -2, -2, -2}, "4H-s-Ei-Ej-Ek"},
                        {{5, -1, -2, -2, -2, -2, -2, -2}, "5H-2s+Ei"}};
            case 8:
                return {{{1, 0, 0, 0, 0, 0, 0, 0, -1}, "H-Ei"},
                        {{2, 0, 0, 0, 0, -1, -1, -1, -1}, "2H-Ei-Ej-Ek-El"},
                        {{3, 0, 0, -1, -1, -1, -1, -1, -2}, "3H-s-Ei+Ej+Ek"},
                        {{4, 0, -1, -1, -1, -1, -2, -2, -2}, "4H-s+Ei-Ej-Ek-El"},
                        {{4, -1, -1, -1, -1, -1, -1, -1, -3}, "4H-s-2Ei"},
                        {{5, 0, -1, -2, -2, -2, -2, -2, -2}, "5H-2s+2Ei+Ej"},
                        {{5, -1, -1, -1, -1, -2, -2, -2, -3}, "5H-s-2Ei-Ej-Ek-El"},
                        {{6, -1, -1, -2, -2, -2, -2, -3, -3}, "6H-2s+Ei+Ej-Ek-El"},
                        {{7, -2, -2, -2, -2, -2, -2, -3, -4}, "7H-2s-2Ei-Ej"},
                        {{7, -1, -2, -2, -2, -3, -3, -3, -3}, "7H-3s+2Ei+Ej+Ek+El"},
                        {{8, -2, -2, -2, -3, -3, -3, -3, -4}, "8H-3s+Ei+Ej+Ek-El"},
                        {{8, -1, -3, -3, -3, -3, -3, -3, -3}, "8H-3s+2Ei"},
                        {{9, -2, -3, -3, -3, -3, -3, -4, -4}, "9H-3s+Ei-Ej-Ek"},
                        {{10, -3, -3, -3, -3, -4, -4, -4, -4}, "10H-4s+Ei+Ej+Ek+El"},
                        {{11, -3, -4, -4, -4, -4, -4, -4, -4}, "11H-4s+Ei"}};
        }
    }
    if (n == 2) {
        if (r == 7) return {{{3, -1, -1, -1, -1, -1, -1, -1}, "-K"}};
        if (r == 8)
            return {{{3, 0, -1, -1, -1, -1, -1, -1, -1}, "-K+Ei"},
                    {{4, -1, -1, -1, -1, -1, -1, -2, -2}, "-K+mij"},
                    {{5, -1, -1, -1, -2, -2, -2, -2, -2}, "-K+Qijk"},
                    {{6, -1, -2, -2, -2, -2, -2, -2, -3}, "-K+Cij"},
                    {{7, -2, -2, -2, -2, -2, -3, -3, -3}, "-K+Vijk"},
                    {{8, -2, -2, -3, -3, -3, -3, -3, -3}, "-K+Fij"},
                    {{9, -3, -3, -3, -3, -3, -3, -3, -4}, "-K+Ti"}};
    }
    if (n == 3 && r == 8) return {{{6, -2, -2, -2, -2, -2, -2, -2, -2}, "-2K"}};
    return {};
}

}  // namespace

std::vector<RulingFamily> ruling_families(int r, int n) {
    auto rulings = enumerate_rulings(r, n);
    auto table = shape_table(r, n);
    std::vector<RulingFamily> out;
    std::map<std::string, std::size_t> slot;
    for (std::size_t i = 0; i < rulings.size(); ++i) {
        auto sig = shape(rulings[i].cls);
        const char* name = nullptr;
        for (const auto& entry : table)
            if (entry.sig == sig) { name = entry.name; break; }
        if (!name)
            throw Error("ruling " + rulings[i].cls.to_string() + " has no named shape");
        auto [it, fresh] = slot.try_emplace(name, out.size());
        if (fresh) out.push_back({name, {}});
        out[it->second].members.push_back(i);
    }
    return out;
}

CurveGraph dynkin_graph(int r) {
    if (r < 3 || r > 8) throw Error("curve graph needs 3 <= r <= 8");
    auto curves = enumerate_negative_curves(r);
    CurveGraph g;
    g.vertices = curves.size();
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            if (intersection(curves[i].cls, curves[j].cls) == 1)
                g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return g;
}

std::vector<std::array<int, 3>> triangles(int r) {
    if (r != 6) throw Error("triangles are specific to the cubic surface");
    auto curves = enumerate_negative_curves(6);
    std::vector<std::array<int, 3>> out;
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            if (intersection(curves[i].cls, curves[j].cls) != 1) continue;
            for (std::size_t k = j + 1; k < curves.size(); ++k)
                if (intersection(curves[i].cls, curves[k].cls) == 1 &&
                    intersection(curves[j].cls, curves[k].cls) == 1)
                    out.push_back({static_cast<int>(i), static_cast<int>(j),
                                   static_cast<int>(k)});
        }
    return out;
}

}  // namespace dp
