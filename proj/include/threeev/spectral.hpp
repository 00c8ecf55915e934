#pragma once

// Stage 1 of the search: spectral parameter arrays.
//
// A candidate spectrum for an n-vertex graph with eigenvalues s > 1 > -t has
// multiplicities 1, n-1-m, m tied together by trace zero:
//     s + (n-1-m) - m t = 0,  i.e.  s = 1 - n + m(t+1).
// enumerate_spectral(t) lists every (n, s, m) passing the feasibility
// conditions (a)-(f) below.

#include "exact.hpp"

#include <vector>

namespace threeev {

constexpr int kTMin = 3;
constexpr int kTMax = 29;

struct SpectralParams {
    int t = 0;
    i64 n = 0;
    i64 s = 0;
    i64 m = 0;

    bool operator==(const SpectralParams&) const = default;
    // Trace-zero linkage between the multiplicity of -t and the spectral radius.
    bool linkage_holds() const { return mul(m, t + 1) == n + s - 1; }
};

// Vertex-count ceiling as a function of t. Two regimes: the generic bound for
// small t and a sharper one available once t >= 11.
inline i64 n_max(int t) {
    if (t < kTMin || t > kTMax) throw std::invalid_argument("n_max: t outside 3..29");
    if (t <= 10) return i64{t} * t + 8 * t + 18 + 18 / (t - 1);
    // floor(t^2/4 + 17 t/2 + 48 + 116/(t-1)) computed over a common denominator
    i64 num = i64{t} * t * (t - 1) + 34 * i64{t} * (t - 1) + 192 * i64{t - 1} + 464;
    return floor_div(num, 4 * i64{t - 1});
}

struct SpectralReport {
    bool a = false;  // n within the per-t vertex ceiling
    bool b = false;  // both eigenvalue-multiplicity bounds n <= l(l+1)/2
    bool c = false;  // n < s^2 + 1
    bool d = false;  // t < s < min((t+1)^2 + t, n-6)
    bool e = false;  // T even and T < ns
    bool f = false;  // W3 divisible by 6
    i64 edge_double = 0;  // T  = s^2 + n-1-m + m t^2   (= 2|E|)
    i64 walk3_sum = 0;    // W3 = s^3 + n-1-m - m t^3   (= 6 * #triangles)

    bool all() const { return a && b && c && d && e && f; }
};

inline SpectralReport check_spectral_conditions(const SpectralParams& p) {
    if (p.n <= 0 || p.s <= 0 || p.m <= 0 || !p.linkage_holds())
        throw std::invalid_argument("check_spectral_conditions: malformed params");
    const i64 t = p.t, n = p.n, s = p.s, m = p.m;
    SpectralReport r;
    r.a = n <= n_max(p.t);
    r.b = (n - m) * (n - m + 1) >= 2 * n && (m + 1) * (m + 2) >= 2 * n;
    r.c = n < s * s + 1;
    r.d = t < s && s < std::min((t + 1) * (t + 1) + t, n - 6);
    r.edge_double = s * s + n - 1 - m + m * t * t;
    r.e = r.edge_double % 2 == 0 && r.edge_double < n * s;
    r.walk3_sum = s * s * s + n - 1 - m - m * t * t * t;
    r.f = r.walk3_sum % 6 == 0;
    return r;
}

struct SpectralOptions {
    // Optional extra floor n > (t - 1/2)^2 / 2; not part of the base
    // definition, kept as a sensitivity toggle.
    bool apply_n_lower_bound = false;
};

// All spectral parameter arrays for t, sorted by (n, s).
inline std::vector<SpectralParams> enumerate_spectral(int t, const SpectralOptions& opt = {}) {
    if (t < kTMin || t > kTMax) throw std::invalid_argument("enumerate_spectral: t outside 3..29");
    std::vector<SpectralParams> out;
    const i64 top = n_max(t);
    for (i64 n = 1; n <= top; ++n) {
        if (opt.apply_n_lower_bound && 8 * n <= i64{2 * t - 1} * (2 * t - 1)) continue;
        for (i64 m = 1; m < n; ++m) {
            const i64 s = 1 - n + m * (t + 1);
            if (s <= 0) continue;
            SpectralParams p{t, n, s, m};
            if (check_spectral_conditions(p).all()) out.push_back(p);
        }
    }
    return out;  // n ascending, and s grows with m, so (n, s) lexicographic
}

} // namespace threeev
