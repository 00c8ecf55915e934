#pragma once

// Exact values of the form (p + q sqrt(d)) / den with integer p, q, den and
// squarefree d. Closed under +, -, and * as long as the radicands agree (or
// one side is rational), which covers everything the certifier compares.

#include "exact.hpp"

#include <numeric>
#include <string>

namespace threeev {

struct Quad {
    i64 p = 0;    // rational numerator part
    i64 q = 0;    // radical coefficient numerator
    i64 den = 1;  // positive common denominator
    i64 d = 1;    // squarefree radicand; d == 1 iff the value is rational

    Quad() = default;
    Quad(i64 value) : p(value) {}  // NOLINT: implicit integer promotion is the point
    Quad(i64 p_, i64 q_, i64 den_, i64 d_) : p(p_), q(q_), den(den_), d(d_) { normalize(); }

    // beta * sqrt(omega), the surd of a squarefree split
    static Quad surd(const SqClass& s) { return Quad(0, s.beta, 1, s.omega); }
    static Quad sqrt_of(i64 k) { return surd(squarefree_split(k)); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Quad: zero denominator");
        if (d <= 0) throw std::invalid_argument("Quad: nonpositive radicand");
        if (d != 1) {
            SqClass s = squarefree_split(d);
            d = s.omega;
            q = mul(q, s.beta);
        }
        if (q == 0) d = 1;
        if (d == 1) { p = add(p, q); q = 0; }  // sqrt(1) folds into the rational part
        if (den < 0) { den = -den; p = -p; q = -q; }
        i64 g = std::gcd(std::gcd(p < 0 ? -p : p, q < 0 ? -q : q), den);
        if (g > 1) { p /= g; q /= g; den /= g; }
    }

    bool is_rational() const { return q == 0; }
    bool is_integer() const { return q == 0 && den == 1; }

    bool compatible(const Quad& o) const { return q == 0 || o.q == 0 || d == o.d; }

    Quad operator-() const { return Quad(-p, -q, den, d); }

    friend Quad operator+(const Quad& a, const Quad& b) {
        if (!a.compatible(b)) throw std::domain_error("Quad: mixed radicands in +");
        const i64 dd = a.q != 0 ? a.d : b.d;
        return Quad(add(mul(a.p, b.den), mul(b.p, a.den)),
                    add(mul(a.q, b.den), mul(b.q, a.den)), mul(a.den, b.den), dd);
    }

    friend Quad operator-(const Quad& a, const Quad& b) { return a + (-b); }

    friend Quad operator*(const Quad& a, const Quad& b) {
        if (!a.compatible(b)) throw std::domain_error("Quad: mixed radicands in *");
        const i64 dd = a.q != 0 ? a.d : b.d;
        // (p1 + q1 r)(p2 + q2 r) = p1 p2 + q1 q2 d + (p1 q2 + q1 p2) r
        return Quad(add(mul(a.p, b.p), mul(mul(a.q, b.q), dd)),
                    add(mul(a.p, b.q), mul(a.q, b.p)), mul(a.den, b.den), dd);
    }

    friend bool operator==(const Quad& a, const Quad& b) {
        // normalized representation is canonical up to the common denominator
        return mul(a.p, b.den) == mul(b.p, a.den) && mul(a.q, b.den) == mul(b.q, a.den) &&
               (a.q == 0 || b.q == 0 ? a.q == b.q : a.d == b.d);
    }
    friend bool operator!=(const Quad& a, const Quad& b) { return !(a == b); }

    // sign of p + q sqrt(d) (denominator is positive)
    int sign() const {
        if (p == 0 && q == 0) return 0;
        if (q == 0) return p > 0 ? 1 : -1;
        if (p == 0) return q > 0 ? 1 : -1;
        if (p > 0 && q > 0) return 1;
        if (p < 0 && q < 0) return -1;
        // opposite signs: compare p^2 with q^2 d
        const i64 pp = mul(p, p), qq = mul(mul(q, q), d);
        if (pp == qq) return 0;
        const bool p_dominates = pp > qq;
        return (p > 0) == p_dominates ? 1 : -1;
    }

    friend bool operator<(const Quad& a, const Quad& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Quad& a, const Quad& b) { return (a - b).sign() > 0; }

    std::string str() const {
        if (is_rational()) {
            std::string s = std::to_string(p);
            if (den != 1) s += "/" + std::to_string(den);
            return s;
        }
        std::string rad = (q == 1 ? "" : q == -1 ? "-" : std::to_string(q) + "*") +
                          ("sqrt(" + std::to_string(d) + ")");
        std::string s;
        if (p != 0) s = std::to_string(p) + (q > 0 ? "+" : "") + rad;
        else s = rad;
        if (den != 1) s = "(" + s + ")/" + std::to_string(den);
        return s;
    }
};

} // namespace threeev
