#include "delpezzo/golden.hpp"

#include <sstream>

namespace dp {

namespace {

// label | coeff g1 g2 | coeff g1 g2 | coeff g1 g2
// generator tokens: e<i> exceptional, m<i><j> line, l<i> conic
constexpr const char* kTableR6 = R"(
Q1 | -1 e2 m12 | -1 e3 m13 | 1 e4 m14
Q1 | -a e2 m12 | -b e3 m13 | 1 e5 m15
Q1 | -c e2 m12 | -d e3 m13 | 1 e6 m16
Q2 | 1 e1 m12 | -1 e3 m23 | 1 e4 m24
Q2 | 1 e1 m12 | -b e3 m23 | 1 e5 m25
Q2 | 1 e1 m12 | -d e3 m23 | 1 e6 m26
Q3 | 1 e1 m13 | 1 e2 m23 | 1 e4 m34
Q3 | 1 e1 m13 | a e2 m23 | 1 e5 m35
Q3 | 1 e1 m13 | c e2 m23 | 1 e6 m36
Q4 | 1 e1 m14 | 1 e2 m24 | 1 e3 m34
Q4 | (1-b) e1 m14 | (a-b) e2 m24 | 1 e5 m45
Q4 | (1-d) e1 m14 | (c-d) e2 m24 | 1 e6 m46
Q5 | 1/b e1 m15 | a/b e2 m25 | 1 e3 m35
Q5 | (1-b)/b e1 m15 | (a-b)/b e2 m25 | 1 e4 m45
Q5 | (b-d)/b e1 m15 | F/b e2 m25 | 1 e6 m56
Q6 | 1/d e1 m16 | c/d e2 m26 | 1 e3 m36
Q6 | (1-d)/d e1 m16 | (c-d)/d e2 m26 | 1 e4 m46
Q6 | (b-d)/d e1 m16 | F/d e2 m26 | 1 e5 m56
m12 | 1 m45 m36 | -1 m35 m46 | 1 m34 m56
m12 | (b-d) m35 m46 | (d-1) m34 m56 | 1 e2 l1
m12 | F m35 m46 | a*(d-c) m34 m56 | 1 e1 l2
m13 | 1 m45 m26 | -1 m25 m46 | 1 m24 m56
m13 | (c-a) m25 m46 | (1-c) m24 m56 | 1 e3 l1
m13 | -F m25 m46 | b*(c-d) m24 m56 | 1 e1 l3
m23 | 1 m45 m16 | -1 m15 m46 | 1 m14 m56
m23 | (a-c) m15 m46 | a*(c-1) m14 m56 | 1 e3 l2
m23 | (b-d) m15 m46 | b*(d-1) m14 m56 | 1 e2 l3
m14 | 1 m35 m26 | -1 m25 m36 | 1 m23 m56
m14 | -E m25 m36 | (b-1)*(c-1) m23 m56 | 1 e4 l1
m14 | -F m25 m36 | b*c m23 m56 | 1 e1 l4
m24 | 1 m35 m16 | -1 m15 m36 | 1 m13 m56
m24 | E m15 m36 | (a-b)*(c-1) m13 m56 | 1 e4 l2
m24 | (b-d) m15 m36 | -b m13 m56 | 1 e2 l4
m34 | 1 m25 m16 | -1 m15 m26 | 1 m12 m56
m34 | -E m15 m26 | (a-b)*(1-d) m12 m56 | 1 e4 l3
m34 | (c-a) m15 m26 | a m12 m56 | 1 e3 l4
m15 | 1 m34 m26 | -1 m24 m36 | 1 m23 m46
m15 | -E m24 m36 | (a-c)*(1-b) m23 m46 | 1 e5 l1
m15 | (d-c) m24 m36 | c m23 m46 | 1 e1 l5
m25 | 1 m34 m16 | -1 m14 m36 | 1 m13 m46
m25 | a*E m14 m36 | (a-b)*(c-a) m13 m46 | 1 e5 l2
m25 | (1-d) m14 m36 | -1 m13 m46 | 1 e2 l5
m35 | 1 m24 m16 | -1 m14 m26 | 1 m12 m46
m35 | -b*E m14 m26 | (a-b)*(b-d) m12 m46 | 1 e5 l3
m35 | (c-1) m14 m26 | 1 m12 m46 | 1 e3 l5
m45 | 1 m23 m16 | -1 m13 m26 | 1 m12 m36
m45 | b*(c-a) m13 m26 | a*(b-d) m12 m36 | 1 e5 l4
m45 | (c-1) m13 m26 | (1-d) m12 m36 | 1 e4 l5
m16 | 1 m34 m25 | -1 m24 m35 | 1 m23 m45
m16 | -E m24 m35 | (a-c)*(1-d) m23 m45 | 1 e6 l1
m16 | (b-a) m24 m35 | a m23 m45 | 1 e1 l6
m26 | 1 m34 m15 | -1 m14 m35 | 1 m13 m45
m26 | c*E m14 m35 | (a-c)*(d-c) m13 m45 | 1 e6 l2
m26 | (1-b) m14 m35 | -1 m13 m45 | 1 e2 l6
m36 | 1 m24 m15 | -1 m14 m25 | 1 m12 m45
m36 | -d*E m14 m25 | (d-b)*(d-c) m12 m45 | 1 e6 l3
m36 | (a-1) m14 m25 | 1 m12 m45 | 1 e3 l6
m46 | 1 m23 m15 | -1 m13 m25 | 1 m12 m35
m46 | d*(c-a) m13 m25 | c*(b-d) m12 m35 | 1 e6 l4
m46 | (a-1) m13 m25 | (1-b) m12 m35 | 1 e4 l6
m56 | 1 m23 m14 | -1 m13 m24 | 1 m12 m34
m56 | d*(c-1) m13 m24 | c*(1-d) m12 m34 | 1 e6 l5
m56 | b*(a-1) m13 m24 | a*(1-b) m12 m34 | 1 e5 l6
E1 | (d-b)/E m12 l2 | (c-a)/E m13 l3 | 1 m14 l4
E1 | (d-1)/E m12 l2 | (c-1)/E m13 l3 | 1 m15 l5
E1 | (b-1)/E m12 l2 | (a-1)/E m13 l3 | 1 m16 l6
E2 | F/E m12 l1 | (c-a)/E m23 l3 | 1 m24 l4
E2 | (c-d)/E m12 l1 | (c-1)/E m23 l3 | 1 m25 l5
E2 | (a-b)/E m12 l1 | (a-1)/E m23 l3 | 1 m26 l6
E3 | F/E m13 l1 | (b-d)/E m23 l2 | 1 m34 l4
E3 | (c-d)/E m13 l1 | (1-d)/E m23 l2 | 1 m35 l5
E3 | (a-b)/E m13 l1 | (1-b)/E m23 l2 | 1 m36 l6
E4 | F/(a-c) m14 l1 | (b-d)/(a-c) m24 l2 | 1 m34 l3
E4 | c/(a-c) m14 l1 | 1/(a-c) m24 l2 | 1 m45 l5
E4 | a/(a-c) m14 l1 | 1/(a-c) m24 l2 | 1 m46 l6
E5 | (d-c)/(c-1) m15 l1 | (d-1)/(c-1) m25 l2 | 1 m35 l3
E5 | -c/(c-1) m15 l1 | -1/(c-1) m25 l2 | 1 m45 l4
E5 | -1/(c-1) m15 l1 | -1/(c-1) m25 l2 | 1 m56 l6
E6 | (b-a)/(a-1) m16 l1 | (b-1)/(a-1) m26 l2 | 1 m36 l3
E6 | -a/(a-1) m16 l1 | -1/(a-1) m26 l2 | 1 m46 l4
E6 | -1/(a-1) m16 l1 | -1/(a-1) m26 l2 | 1 m56 l5
)";

constexpr const char* kTableR8 = R"(
HE3 | 1 e1 m13 | -a3*a4/(a3-a4) e7 m37 | a3*a4/(a3-a4) e8 m38
HE3 | 1 e2 m23 | -a3/(a3-a4) e7 m37 | a4/(a3-a4) e8 m38
HE3 | 1 e4 m34 | (a3*a4-a3)/(a3-a4) e7 m37 | (-a3*a4+a4)/(a3-a4) e8 m38
HE3 | 1 e5 m35 | (-a1*a3+a3*a4)/(a1*a3-a1*a4) e7 m37 | (a1*a4-a3*a4)/(a1*a3-a1*a4) e8 m38
HE3 | 1 e6 m36 | (-a2*a3+a3*a4)/(a2*a3-a2*a4) e7 m37 | (a2*a4-a3*a4)/(a2*a3-a2*a4) e8 m38
)";

std::string map_token(const std::string& tok) {
    if (tok.empty()) throw Error("empty generator token");
    if (tok[0] == 'e') return "E" + tok.substr(1);
    if (tok[0] == 'l') return "Q" + tok.substr(1);
    return tok;
}

std::vector<GoldenLine> parse_table(const char* text) {
    std::vector<GoldenLine> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        GoldenLine gl;
        std::size_t bar = line.find('|');
        gl.label = line.substr(0, bar);
        while (!gl.label.empty() && gl.label.back() == ' ') gl.label.pop_back();
        std::string rest = line.substr(bar + 1);
        std::istringstream parts(rest);
        std::string chunk;
        while (std::getline(parts, chunk, '|')) {
            std::istringstream ts(chunk);
            GoldenTerm t;
            std::string g1, g2;
            if (!(ts >> t.coeff >> g1 >> g2))
                throw Error("malformed table line: " + line);
            t.g1 = map_token(g1);
            t.g2 = map_token(g2);
            gl.terms.push_back(std::move(t));
        }
        if (gl.terms.size() != 3) throw Error("table line needs three terms: " + line);
        out.push_back(std::move(gl));
    }
    return out;
}

}  // namespace

const std::vector<GoldenLine>& golden_r6_lines() {
    static const std::vector<GoldenLine> lines = parse_table(kTableR6);
    return lines;
}

const std::vector<GoldenLine>& golden_r8_lines() {
    static const std::vector<GoldenLine> lines = parse_table(kTableR8);
    return lines;
}

}  // namespace dp
