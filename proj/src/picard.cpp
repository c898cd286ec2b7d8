#include "delpezzo/picard.hpp"

#include <algorithm>
#include <set>

namespace dp {

DivisorClass::DivisorClass(int r_, std::vector<int> coeffs) : r(r_), c(std::move(coeffs)) {
    if (r < 0 || r > 8) throw Error("r out of range");
    if (c.size() != static_cast<std::size_t>(r + 1)) throw Error("divisor class needs r+1 coefficients");
}

bool DivisorClass::operator<(const DivisorClass& o) const {
    if (r != o.r) return r < o.r;
    return c < o.c;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (r != o.r) throw Error("divisor classes on different surfaces");
    DivisorClass s(r, c);
    for (int i = 0; i <= r; ++i) s.c[i] += o.c[i];
    return s;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    if (r != o.r) throw Error("divisor classes on different surfaces");
    DivisorClass s(r, c);
    for (int i = 0; i <= r; ++i) s.c[i] -= o.c[i];
    return s;
}

std::string DivisorClass::to_string() const {
    std::string s;
    auto term = [&s](int coeff, const std::string& sym) {
        if (coeff == 0) return;
        if (coeff > 0 && !s.empty()) s += '+';
        if (coeff == -1) s += '-';
        else if (coeff != 1) s += std::to_string(coeff);
        s += sym;
    };
    term(c[0], "H");
    for (int i = 1; i <= r; ++i) term(c[i], "E" + std::to_string(i));
    return s.empty() ? "0" : s;
}

long intersection(const DivisorClass& a, const DivisorClass& b) {
    if (a.r != b.r) throw Error("divisor classes on different surfaces");
    long v = static_cast<long>(a.c[0]) * b.c[0];
    for (int i = 1; i <= a.r; ++i) v -= static_cast<long>(a.c[i]) * b.c[i];
    return v;
}

DivisorClass anticanonical(int r) {
    std::vector<int> c(r + 1, -1);
    c[0] = 3;
    return DivisorClass(r, std::move(c));
}

namespace {

DivisorClass curve_class(int r, CurveFamily family, const std::vector<int>& idx) {
    std::vector<int> c(r + 1, 0);
    switch (family) {
        case CurveFamily::Exceptional:
            c[idx[0]] = 1;
            break;
        case CurveFamily::Line:
            c[0] = 1;
            c[idx[0]] = -1;
            c[idx[1]] = -1;
            break;
        case CurveFamily::Conic:
            c[0] = 2;
            for (int i = 1; i <= r; ++i) c[i] = -1;
            for (int m : idx) c[m] = 0;
            break;
        case CurveFamily::Cubic:
            c[0] = 3;
            for (int i = 1; i <= r; ++i) c[i] = -1;
            c[idx[0]] -= 1;
            if (idx.size() == 2) c[idx[1]] = 0;
            break;
        case CurveFamily::Quartic:
            c[0] = 4;
            for (int i = 1; i <= r; ++i) c[i] = -1;
            for (int m : idx) c[m] = -2;
            break;
        case CurveFamily::Quintic:
            c[0] = 5;
            for (int i = 1; i <= r; ++i) c[i] = -2;
            for (int m : idx) c[m] = -1;
            break;
        case CurveFamily::Sextic:
            c[0] = 6;
            for (int i = 1; i <= r; ++i) c[i] = -2;
            c[idx[0]] = -3;
            break;
    }
    return DivisorClass(r, std::move(c));
}

void push(std::vector<NegativeCurve>& out, int r, CurveFamily family, std::vector<int> idx) {
    NegativeCurve nc;
    nc.family = family;
    nc.cls = curve_class(r, family, idx);
    nc.idx = std::move(idx);
    out.push_back(std::move(nc));
}

}  // namespace

std::string NegativeCurve::label() const {
    const char* prefix = nullptr;
    switch (family) {
        case CurveFamily::Exceptional: prefix = "E"; break;
        case CurveFamily::Line: prefix = "m"; break;
        case CurveFamily::Conic: prefix = "Q"; break;
        case CurveFamily::Cubic: prefix = "C"; break;
        case CurveFamily::Quartic: prefix = "V"; break;
        case CurveFamily::Quintic: prefix = "F"; break;
        case CurveFamily::Sextic: prefix = "T"; break;
    }
    std::string s = prefix;
    for (int i : idx) s += std::to_string(i);
    return s;
}

std::vector<NegativeCurve> enumerate_negative_curves(int r) {
    if (r < 0 || r > 8) throw Error("r out of range");
    std::vector<NegativeCurve> out;
    for (int i = 1; i <= r; ++i) push(out, r, CurveFamily::Exceptional, {i});
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) push(out, r, CurveFamily::Line, {i, j});
    if (r == 5) push(out, r, CurveFamily::Conic, {});
    if (r == 6)
        for (int i = 1; i <= r; ++i) push(out, r, CurveFamily::Conic, {i});
    if (r == 7)
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) push(out, r, CurveFamily::Conic, {i, j});
    if (r == 8)
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j)
                for (int k = j + 1; k <= r; ++k) push(out, r, CurveFamily::Conic, {i, j, k});
    if (r == 7)
        for (int i = 1; i <= r; ++i) push(out, r, CurveFamily::Cubic, {i});
    if (r == 8) {
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j)
                if (j != i) push(out, r, CurveFamily::Cubic, {i, j});
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j)
                for (int k = j + 1; k <= r; ++k) push(out, r, CurveFamily::Quartic, {i, j, k});
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) push(out, r, CurveFamily::Quintic, {i, j});
        for (int i = 1; i <= r; ++i) push(out, r, CurveFamily::Sextic, {i});
    }
    return out;
}

std::string Generator::label() const {
    if (kappa) return "k" + std::to_string(kappa_index);
    return curve.label();
}

std::vector<Generator> generators(int r) {
    auto curves = enumerate_negative_curves(r);
    std::vector<Generator> out;
    out.reserve(curves.size() + 2);
    int id = 0;
    for (auto& nc : curves) {
        Generator g;
        g.id = id++;
        g.cls = nc.cls;
        g.curve = std::move(nc);
        out.push_back(std::move(g));
    }
    if (r == 8) {
        for (int k = 1; k <= 2; ++k) {
            Generator g;
            g.id = id++;
            g.kappa = true;
            g.kappa_index = k;
            g.cls = anticanonical(8);
            out.push_back(std::move(g));
        }
    }
    return out;
}

DivisorClass WeylReflection::apply(const DivisorClass& d) const {
    long m = intersection(d, root);
    DivisorClass out = d;
    for (int i = 0; i <= d.r; ++i) out.c[i] += static_cast<int>(m) * root.c[i];
    return out;
}

std::vector<WeylReflection> weyl_generators(int r) {
    if (r < 3 || r > 8) throw Error("Weyl generators need 3 <= r <= 8");
    std::vector<WeylReflection> gens;
    for (int i = 1; i < r; ++i) {
        std::vector<int> c(r + 1, 0);
        c[i] = 1;
        c[i + 1] = -1;
        gens.push_back({DivisorClass(r, std::move(c))});
    }
    std::vector<int> c(r + 1, 0);
    c[0] = 1;
    c[1] = c[2] = c[3] = -1;
    gens.push_back({DivisorClass(r, std::move(c))});
    return gens;
}

std::vector<DivisorClass> weyl_orbit(const DivisorClass& start,
                                     const std::vector<WeylReflection>& gens) {
    std::set<DivisorClass> seen{start};
    std::vector<DivisorClass> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        DivisorClass d = queue[head];
        for (const auto& g : gens) {
            DivisorClass next = g.apply(d);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return queue;
}

bool is_nef(const DivisorClass& d, const std::vector<NegativeCurve>& curves) {
    for (const auto& nc : curves)
        if (intersection(d, nc.cls) < 0) return false;
    return true;
}

long h0_nef(const DivisorClass& d, const std::vector<NegativeCurve>& curves) {
    if (!is_nef(d, curves)) throw Error("h0_nef needs a nef class");
    return (intersection(d, d) + intersection(d, anticanonical(d.r))) / 2 + 1;
}

}  // namespace dp
