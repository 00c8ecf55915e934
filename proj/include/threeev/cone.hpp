#pragma once

// Cones with three distinct valencies. With eigenvalues s > 1 > -t put
// A = t and B = t - 2; the two non-apex Perron entries alpha_x > alpha_y obey
//   alpha_x alpha_y = A + B = 2(t-1),
//   n = (alpha_x + alpha_y)^2 + 1 + t,
//   s^2 - (n - 2t) s + (n-1)(2t-3) = 0,
// and n is pinched into a window that empties for t >= 7. The finite case
// search below eliminates every factorisation for t in 3..6.

#include "exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace threeev {

struct ConeBounds {
    i64 lower_a = 0;   // strict: n > 9t - 7
    i64 upper_a = 0;   // n <= (2t-1)^2 + t + 1
    i64 upper_b = 0;   // n <= floor((2t-2)^2/(t-2) + 6t - 5)
    i64 lower_d = 0;   // n >= 6t - 6 + ceil(sqrt(8(2t-2)(2t-3)))
    i64 window_lo = 0, window_hi = 0;

    bool feasible() const { return window_lo <= window_hi; }
};

inline ConeBounds cone_bounds(i64 t) {
    if (t < 3) throw std::invalid_argument("cone_bounds: t >= 3 required");
    ConeBounds b;
    const i64 A = t, B = t - 2, AB = A + B;
    b.lower_a = 9 * t - 7;
    b.upper_a = (AB + 1) * (AB + 1) + A + 1;
    b.upper_b = floor_div(AB * AB, B) + 3 * AB + 1;
    b.lower_d = 3 * AB + isqrt_ceil(8 * AB * (AB - 1));
    b.window_lo = std::max(b.lower_a + 1, b.lower_d);
    b.window_hi = std::min(b.upper_a, b.upper_b);
    return b;
}

struct ConeCandidate {
    i64 t = 0;
    i64 omega = 1;          // shared squarefree class of the two entries
    i64 beta_x = 0, beta_y = 0;  // alpha_x = beta_x sqrt(omega) > alpha_y
    i64 n = 0;
    std::optional<i64> s;   // integer spectral radius when one survives the checks
    std::optional<i64> n1;  // size of the larger-valency class
    std::string verdict;    // why this factorisation dies ("survives" otherwise)
};

// Case search for t in 3..6: every same-class factorisation
// alpha_x alpha_y = 2(t-1) is built, pushed through the quadratic for s, the
// multiplicity integrality m = (n-1+s)/(t+1), the class-size formula and the
// window. Expected: no survivors for any t.
struct ConeReport {
    i64 t = 0;
    ConeBounds bounds;
    std::vector<ConeCandidate> eliminated;
    std::vector<ConeCandidate> survivors;
};

inline ConeReport cone_case_search(i64 t) {
    if (t < 3 || t > 6) throw std::invalid_argument("cone_case_search: t in 3..6");
    ConeReport rep;
    rep.t = t;
    rep.bounds = cone_bounds(t);
    const i64 target = 2 * (t - 1);  // alpha_x alpha_y = omega beta_x beta_y

    for (i64 omega = 1; omega <= target; ++omega) {
        if (target % omega) continue;
        if (squarefree_split(omega).beta != 1) continue;
        const i64 prod = target / omega;  // beta_x beta_y
        for (i64 by = 1; by * by < prod; ++by) {
            if (prod % by) continue;
            const i64 bx = prod / by;  // bx > by, strict by loop bound
            ConeCandidate cc;
            cc.t = t;
            cc.omega = omega;
            cc.beta_x = bx;
            cc.beta_y = by;
            cc.n = omega * (bx + by) * (bx + by) + 1 + t;

            auto eliminate = [&](std::string why) {
                cc.verdict = std::move(why);
                rep.eliminated.push_back(cc);
            };

            // s^2 - (n - 2t) s + (n-1)(2t-3) = 0
            const i64 lin = cc.n - 2 * t;
            const i64 con = (cc.n - 1) * (2 * t - 3);
            const i64 disc = lin * lin - 4 * con;
            if (disc < 0) { eliminate("negative discriminant " + std::to_string(disc)); continue; }
            const auto root = isqrt_exact(disc);
            if (!root) { eliminate("non-square discriminant " + std::to_string(disc)); continue; }

            bool pushed = false;
            for (int sign = -1; sign <= 1; sign += 2) {
                const i64 twice_s = lin + sign * *root;
                if (twice_s % 2) continue;
                const i64 s = twice_s / 2;
                if (s <= t) continue;
                if ((cc.n - 1 + s) % (t + 1)) continue;  // m integral
                const i64 m = (cc.n - 1 + s) / (t + 1);
                if (m < 1) continue;
                // n1 (alpha_x - alpha_y) = s (alpha_x + alpha_y) - (n-1) alpha_y,
                // exact in the shared class after dividing sqrt(omega).
                const i64 num = s * (bx + by) - (cc.n - 1) * by;
                if (num % (bx - by)) continue;
                const i64 n1 = num / (bx - by);
                const i64 n2 = cc.n - 1 - n1;
                ConeCandidate sc = cc;
                sc.s = s;
                sc.n1 = n1;
                if (n1 < 1 || n2 < 1) {
                    sc.verdict = "class size n1 = " + std::to_string(n1) +
                                 " leaves fewer than three valencies";
                    rep.eliminated.push_back(sc);
                    pushed = true;
                    continue;
                }
                if (cc.n <= rep.bounds.lower_a || cc.n > rep.bounds.window_hi ||
                    cc.n < rep.bounds.lower_d) {
                    sc.verdict = "n = " + std::to_string(cc.n) + " outside the cone window";
                    rep.eliminated.push_back(sc);
                    pushed = true;
                    continue;
                }
                sc.verdict = "survives";
                rep.survivors.push_back(sc);
                pushed = true;
            }
            if (!pushed)
                eliminate("no admissible integer root (s > t, m and n1 integrality all fail)");
        }
    }
    return rep;
}

} // namespace threeev
