#pragma once

// Stage 2: feasible valency arrays over a spectral parameter array.
//
// Valencies of a putative graph with Perron entries alpha_v = beta_v sqrt(omega)
// are k_i = t + omega beta_i^2 with beta_1 < ... < beta_r, r >= 3 (the one- and
// two-valency cases are settled separately and excluded from the search).
//
// Pairs of distinct-degree vertices obey, with q = (alpha_i - alpha_j) alpha_j
// = omega beta_j (beta_i - beta_j):
//   adjacent:     q <= 2(t-1)
//   nonadjacent:  q <= t
// so q > t forces adjacency, and every adjacent pair x ~ y satisfies
// d_x + d_y - nu_{x,y} >= n - 2m.

#include "exact.hpp"
#include "spectral.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace threeev {

struct ValencyArray {
    SpectralParams params;
    i64 omega = 1;
    std::vector<i64> betas;  // strictly increasing

    int r() const { return static_cast<int>(betas.size()); }
    i64 k(int i) const { return params.t + mul(omega, mul(betas[i], betas[i])); }
    std::vector<i64> valencies() const {
        std::vector<i64> ks(betas.size());
        for (int i = 0; i < r(); ++i) ks[i] = k(i);
        return ks;
    }
    // Closed 3-walk count at a degree-k(i) vertex.
    i64 tau(int i) const {
        const i64 t = params.t;
        return (params.s - t + 1) * (k(i) - t) - (t - 1) * t;
    }
    bool operator==(const ValencyArray&) const = default;
};

// Minimum degree floor in terms of t.
inline i64 k1_min(int t) {
    if (t >= 11) return t + 3;
    if (t >= 7) return t + 2;
    return t + 1;
}

// Pair quantities, all exact integers within the shared class.
inline i64 pair_q(const ValencyArray& v, int i, int j) {
    // (alpha_i - alpha_j) alpha_j for i > j
    return mul(v.omega, mul(v.betas[j], v.betas[i] - v.betas[j]));
}

inline i64 pair_ct(const ValencyArray& v, int i, int j) {
    return mul(v.omega, mul(v.betas[i], v.betas[j]));
}

// d_x + d_y - nu_{x,y} for a hypothetical adjacent pair from classes i, j.
inline i64 pair_bound_verts(const ValencyArray& v, int i, int j) {
    return v.k(i) + v.k(j) - pair_ct(v, i, j) + v.params.t - 1;
}

// T = sum of squared eigenvalues = twice the edge count.
inline i64 s_sq_T(const SpectralParams& p) {
    return p.s * p.s + p.n - 1 - p.m + p.m * i64{p.t} * p.t;
}

// Sum of cubed eigenvalues = six times the triangle count.
inline i64 walk3_total(const SpectralParams& p) {
    return p.s * p.s * p.s + p.n - 1 - p.m - p.m * i64{p.t} * p.t * p.t;
}

struct ValencyReport {
    bool a = false;  // shared squarefree class, betas strictly increasing, r >= 3
    bool b = false;  // k1_min <= k_1 and k_r <= min((t+1)^2 + t, n-2)
    bool c = false;  // every pair: q <= 2t-2
    bool d = false;  // forced-adjacent pairs (q > t) meet the n-2m floor
    bool e = false;  // every tau_i is a nonnegative even integer
    bool f = false;  // top class has a possible non-neighbour class (q <= t)
    bool g = false;  // some pair (same class allowed) meets the n-2m floor
    bool h = false;  // edge-count budget leaves room for n_r >= 1
    i64 h_slack = 0; // T - n k_1 - sum_{i=2..r-1}(k_i-k_1) - (k_r-k_1)

    bool all() const { return a && b && c && d && e && f && g && h; }
};

inline ValencyReport check_valency_conditions(const ValencyArray& v) {
    ValencyReport rep;
    const i64 t = v.params.t, n = v.params.n, m = v.params.m;
    const int r = v.r();
    if (r < 3) return rep;

    rep.a = true;
    for (int i = 0; i + 1 < r; ++i)
        if (v.betas[i] >= v.betas[i + 1]) rep.a = false;
    if (squarefree_split(v.omega).beta != 1 || v.omega < 1) rep.a = false;

    const i64 cap = std::min((t + 1) * (t + 1) + t, n - 2);
    rep.b = v.k(0) >= k1_min(v.params.t) && v.k(r - 1) <= cap;

    rep.c = true;
    rep.d = true;
    const i64 floor_n2m = n - 2 * m;
    for (int i = 1; i < r; ++i)
        for (int j = 0; j < i; ++j) {
            const i64 q = pair_q(v, i, j);
            if (q > 2 * t - 2) rep.c = false;
            if (q > t && pair_bound_verts(v, i, j) < floor_n2m) rep.d = false;
        }

    rep.e = true;
    for (int i = 0; i < r; ++i) {
        const i64 w = v.tau(i);
        if (w < 0 || w % 2 != 0) rep.e = false;
    }

    rep.f = false;
    for (int i = 0; i + 1 < r; ++i)
        if (pair_q(v, r - 1, i) <= t) rep.f = true;

    rep.g = false;
    for (int i = 0; i < r && !rep.g; ++i) {
        // same-class pair: nu_adj = 1 - t + omega beta_i^2 must be nonnegative
        if (pair_ct(v, i, i) >= t - 1 && v.k(i) + 2 * t - 1 >= floor_n2m) rep.g = true;
        for (int j = 0; j < i; ++j)
            if (pair_bound_verts(v, i, j) >= floor_n2m) { rep.g = true; break; }
    }

    // (h): with every class nonempty, sum n_i k_i = T caps the top count:
    // n_r (k_r - k_1) <= T - n k_1 - sum_{i=2..r-1} (k_i - k_1); need n_r >= 1.
    const i64 T = s_sq_T(v.params);
    i64 mid = 0;
    for (int i = 1; i + 1 < r; ++i) mid += v.k(i) - v.k(0);
    rep.h_slack = T - n * v.k(0) - mid - (v.k(r - 1) - v.k(0));
    rep.h = rep.h_slack >= 0;
    return rep;
}

struct ValencyOptions {
    // Degree bracket k_1 < s < k_r. The defining text omits it but the prose
    // derivation uses it; calibrated ON against the published counts.
    bool bracket = true;
};

// All feasible valency arrays over p, sorted by (omega, betas).
inline std::vector<ValencyArray> enumerate_valency_arrays(const SpectralParams& p,
                                                          const ValencyOptions& opt = {}) {
    std::vector<ValencyArray> out;
    const i64 t = p.t, n = p.n, s = p.s, m = p.m;
    const i64 cap = std::min((t + 1) * (t + 1) + t, n - 2);
    const i64 kmin = k1_min(p.t);
    const i64 T = s_sq_T(p);
    const i64 floor_n2m = n - 2 * m;

    for (i64 omega = 1; t + omega <= cap; ++omega) {
        if (squarefree_split(omega).beta != 1) continue;
        // admissible beta values: k in range and tau(k) a nonnegative even integer
        std::vector<i64> pool;
        for (i64 b = 1; t + omega * b * b <= cap; ++b) {
            const i64 k = t + omega * b * b;
            if (k < kmin) continue;
            const i64 w = (s - t + 1) * (k - t) - (t - 1) * t;
            if (w >= 0 && w % 2 == 0) pool.push_back(b);
        }
        if (pool.size() < 3) continue;

        ValencyArray cur;
        cur.params = p;
        cur.omega = omega;

        std::function<void(std::size_t, i64)> dfs = [&](std::size_t start, i64 mid_sum) {
            const int r = cur.r();
            if (r >= 3) {
                bool ok = !opt.bracket || (cur.k(0) < s && s < cur.k(r - 1));
                if (ok) {  // (f)
                    ok = false;
                    for (int i = 0; i + 1 < r; ++i)
                        if (pair_q(cur, r - 1, i) <= t) { ok = true; break; }
                }
                if (ok) {  // (g)
                    ok = false;
                    for (int i = 0; i < r && !ok; ++i) {
                        if (pair_ct(cur, i, i) >= t - 1 && cur.k(i) + 2 * t - 1 >= floor_n2m)
                            ok = true;
                        for (int j = 0; j < i; ++j)
                            if (pair_bound_verts(cur, i, j) >= floor_n2m) { ok = true; break; }
                    }
                }
                if (ok && T - n * cur.k(0) - mid_sum >= cur.k(r - 1) - cur.k(0))
                    out.push_back(cur);
            }
            for (std::size_t idx = start; idx < pool.size(); ++idx) {
                const i64 b_new = pool[idx];
                const i64 k_new = t + omega * b_new * b_new;
                i64 mid_next = 0;
                if (!cur.betas.empty()) {
                    bool ok = true;
                    for (int j = 0; j < cur.r(); ++j) {
                        const i64 q = mul(omega, mul(cur.betas[j], b_new - cur.betas[j]));
                        if (q > 2 * t - 2) { ok = false; break; }
                        if (q > t) {
                            const i64 bv = k_new + cur.k(j) - mul(omega, mul(b_new, cur.betas[j])) + t - 1;
                            if (bv < floor_n2m) { ok = false; break; }
                        }
                    }
                    if (!ok) continue;
                    // (h) is monotone along extensions; prune once the budget is gone
                    mid_next = mid_sum + (cur.r() >= 2 ? cur.k(cur.r() - 1) - cur.k(0) : 0);
                    if (T - n * cur.k(0) - mid_next < k_new - cur.k(0)) continue;
                } else if (opt.bracket && k_new >= s) {
                    break;  // pool is ascending; no later start can satisfy k_1 < s
                }
                cur.betas.push_back(b_new);
                dfs(idx + 1, mid_next);
                cur.betas.pop_back();
            }
        };
        dfs(0, 0);
    }
    return out;  // omega ascending, betas lexicographic by construction
}

} // namespace threeev
