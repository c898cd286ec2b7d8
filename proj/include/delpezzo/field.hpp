#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational arithmetic. Elements are GMP rationals, always canonical.
struct Rationals {
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long n) const { return Elem(n); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw Error("division by zero in Q");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    /// Accepts "n" or "n/d" with optional leading minus.
    Elem from_string(std::string_view s) const {
        mpq_class x;
        if (x.set_str(std::string(s), 10) != 0)
            throw Error("cannot parse rational '" + std::string(s) + "'");
        if (sgn(x.get_den()) == 0) throw Error("zero denominator in '" + std::string(s) + "'");
        x.canonicalize();
        return x;
    }

    std::string name() const { return "Q"; }
};

/// Arithmetic mod a prime p, 5 < p < 2^31. Elements are canonical
/// representatives in [0, p). Small factorials appear as coefficients of
/// second-order derivative conditions, hence the lower bound on p.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p <= 5) throw Error("prime field needs p > 5");
        if (p >= (1ull << 31)) throw Error("prime field modulus too large");
        if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_long(long n) const {
        long long m = n % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return static_cast<Elem>(m);
    }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem inv(Elem a) const {
        if (a == 0) throw Error("division by zero mod " + std::to_string(p_));
        return pow(a, p_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::string to_string(Elem a) const { return std::to_string(a); }

    /// Accepts integers (any sign) and "n/d"; the quotient is resolved mod p.
    Elem from_string(std::string_view s) const {
        auto slash = s.find('/');
        if (slash != std::string_view::npos) {
            Elem n = parse_int(s.substr(0, slash));
            Elem d = parse_int(s.substr(slash + 1));
            return div(n, d);
        }
        return parse_int(s);
    }

    std::string name() const { return "Fp:" + std::to_string(p_); }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
            if (n % q == 0) return n == q;
        // deterministic Miller-Rabin for n < 3.2 * 10^18
        std::uint64_t d = n - 1;
        int s = 0;
        while ((d & 1) == 0) { d >>= 1; ++s; }
        for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
            std::uint64_t x = 1, base = a % n, e = d;
            while (e) {  // n < 2^31 so products fit in 64 bits
                if (e & 1) x = (x * base) % n;
                base = (base * base) % n;
                e >>= 1;
            }
            if (x == 1 || x == n - 1) continue;
            bool witness = true;
            for (int i = 1; i < s; ++i) {
                x = (x * x) % n;
                if (x == n - 1) { witness = false; break; }
            }
            if (witness) return false;
        }
        return true;
    }

private:
    Elem parse_int(std::string_view s) const {
        if (s.empty()) throw Error("empty field element");
        bool negate = false;
        std::size_t i = 0;
        if (s[0] == '-') { negate = true; i = 1; }
        else if (s[0] == '+') i = 1;
        if (i == s.size()) throw Error("cannot parse field element '" + std::string(s) + "'");
        Elem v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw Error("cannot parse field element '" + std::string(s) + "'");
            v = (v * 10 + static_cast<Elem>(s[i] - '0')) % p_;
        }
        return negate ? neg(v) : v;
    }

    std::uint64_t p_;
};

}  // namespace dp
