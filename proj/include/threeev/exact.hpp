#pragma once

// Exact integer and quadratic-surd arithmetic. Everything downstream decides
// feasibility through this header; there is no floating point on any decision
// path.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace threeev {

using i64 = std::int64_t;

// Overflow-checked arithmetic. The search ranges (t <= 29, n <= 509) keep all
// intermediates well inside 64 bits, but a silent wrap would corrupt counts,
// so every product/sum on a decision path traps instead.
inline i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("i64 add overflow");
    return r;
}

inline i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("i64 sub overflow");
    return r;
}

inline i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i64 mul overflow");
    return r;
}

// Integer square root if k is a perfect square, otherwise empty.
inline std::optional<i64> isqrt_exact(i64 k) {
    if (k < 0) return std::nullopt;
    if (k < 2) return k;
    // Newton iteration on integers; converges in a few steps for 64-bit input.
    i64 x = k, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + k / x) / 2;
    }
    return x * x == k ? std::optional<i64>(x) : std::nullopt;
}

// A positive integer written as omega * beta^2 with omega squarefree.
// Represents the surd value beta * sqrt(omega).
struct SqClass {
    i64 omega = 1;
    i64 beta = 1;

    i64 square() const { return mul(omega, mul(beta, beta)); }
    bool operator==(const SqClass&) const = default;
};

// Split k >= 1 as omega * beta^2, omega squarefree (trial division).
inline SqClass squarefree_split(i64 k) {
    if (k <= 0) throw std::invalid_argument("squarefree_split: k must be positive");
    i64 omega = 1, beta = 1, n = k;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        for (int i = 0; i < e / 2; ++i) beta = mul(beta, d);
        if (e & 1) omega = mul(omega, d);
    }
    omega = mul(omega, n);
    return {omega, beta};
}

// c_t(a,b) = sqrt((a-t)(b-t)), exact because a-t and b-t share one squarefree
// class. Mismatched classes are a caller bug, never a rounding fallback.
inline i64 c_t(i64 a, i64 b, i64 t) {
    if (a <= t || b <= t) throw std::invalid_argument("c_t: needs a > t and b > t");
    SqClass ca = squarefree_split(a - t);
    SqClass cb = squarefree_split(b - t);
    if (ca.omega != cb.omega)
        throw std::domain_error("c_t: squarefree class mismatch (" + std::to_string(ca.omega) +
                                " vs " + std::to_string(cb.omega) + ")");
    return mul(ca.omega, mul(ca.beta, cb.beta));
}

inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

// ceil(sqrt(k)) for k >= 0.
inline i64 isqrt_ceil(i64 k) {
    if (k <= 0) return 0;
    i64 x = k, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + k / x) / 2;
    }
    return x * x == k ? x : x + 1;
}

} // namespace threeev
