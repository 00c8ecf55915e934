#pragma once

// Stage 3: valency multiplicities.
//
// For valencies k_1 < ... < k_r with multiplicities n_1..n_r, summing the
// entries of A alpha = s alpha and of the rank-one identity gives
//   (5)  sum n_i k_i alpha_i          = s sum n_i alpha_i
//   (6)  (sum n_i alpha_i)^2          = sum n_i (k_i - 1)(k_i + t)
//   (7)  sum n_i k_i                  = s^2 + n-1-m + m t^2
//   (8)  sum n_i tau_i                = s^3 + n-1-m - m t^3
// With alpha_i = beta_i sqrt(omega), (5) divides by sqrt(omega) and (6)
// squares to omega (sum n_i beta_i)^2 — integer arithmetic throughout.

#include "valency.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace threeev {

struct MultiplicityArray {
    ValencyArray valencies;
    std::vector<i64> counts;

    bool operator==(const MultiplicityArray&) const = default;
};

// Largest prefix 1..h of the valency list whose classes are pairwise forced
// non-adjacent (every such pair, same-class included, stays strictly below the
// n - 2m floor); the prefix then spans an independent set of size
// n_1 + ... + n_h, which interlacing caps at m. Zero when no prefix qualifies.
inline int h_frak(const ValencyArray& v) {
    const i64 floor_n2m = v.params.n - 2 * v.params.m;
    const i64 t = v.params.t;
    int h = 0;
    for (int cand = 1; cand <= v.r(); ++cand) {
        bool ok = true;
        for (int j = 0; j < cand && ok; ++j) {
            const i64 bv = v.k(cand - 1) + v.k(j) - pair_ct(v, cand - 1, j) + t - 1;
            if (bv >= floor_n2m) ok = false;
        }
        if (!ok) break;
        h = cand;
    }
    return h;
}

// Exact rational bounds on n_i once the tail n_{i+1}..n_r is fixed, from the
// edge-count identity T = sum n_j k_j and every class being nonempty.
// Index i is 0-based here (valid for i >= 1); returns {ceil(lower), floor(upper)}.
inline std::pair<i64, i64> lemma52_bounds(const ValencyArray& v, int i,
                                          const std::vector<i64>& tail) {
    const int r = v.r();
    const i64 T = s_sq_T(v.params), n = v.params.n;
    i64 up_num = T - n * v.k(0);
    i64 lo_num = T - n * v.k(i - 1);
    for (int j = i + 1; j < r; ++j) {
        const i64 nj = tail[j - (i + 1)];
        up_num -= nj * (v.k(j) - v.k(0));
        lo_num -= nj * (v.k(j) - v.k(i - 1));
    }
    for (int j = 0; j < i; ++j) {
        up_num -= v.k(j) - v.k(0);
        lo_num -= v.k(j) - v.k(i - 1);
    }
    return {ceil_div(lo_num, v.k(i) - v.k(i - 1)), floor_div(up_num, v.k(i) - v.k(0))};
}

struct MultiplicityReport {
    bool eq5 = false, eq6 = false, eq7 = false, eq8 = false;
    bool sum_n = false;      // counts sum to n, all >= 1
    bool indep = false;      // sum of the first h_frak counts <= m
    bool all() const { return eq5 && eq6 && eq7 && eq8 && sum_n && indep; }
};

inline MultiplicityReport check_multiplicity_equations(const MultiplicityArray& ma) {
    const ValencyArray& v = ma.valencies;
    const int r = v.r();
    MultiplicityReport rep;
    if (static_cast<int>(ma.counts.size()) != r) return rep;

    i64 total = 0;
    bool positive = true;
    for (i64 c : ma.counts) { total += c; positive = positive && c >= 1; }
    rep.sum_n = positive && total == v.params.n;

    i64 sum_b = 0, sum_kb = 0, sum_k = 0, sum_q = 0, sum_tau = 0;
    for (int i = 0; i < r; ++i) {
        const i64 c = ma.counts[i];
        sum_b += mul(c, v.betas[i]);
        sum_kb += mul(c, mul(v.k(i), v.betas[i]));
        sum_k += mul(c, v.k(i));
        sum_q += mul(c, mul(v.k(i) - 1, v.k(i) + v.params.t));
        sum_tau += mul(c, v.tau(i));
    }
    rep.eq5 = sum_kb == mul(v.params.s, sum_b);
    rep.eq6 = mul(v.omega, mul(sum_b, sum_b)) == sum_q;
    rep.eq7 = sum_k == s_sq_T(v.params);
    rep.eq8 = sum_tau == walk3_total(v.params);

    const int h = h_frak(v);
    i64 head = 0;
    for (int i = 0; i < h; ++i) head += ma.counts[i];
    rep.indep = head <= v.params.m;
    return rep;
}

// Neighbourhood breakdowns of one class-i vertex over given class sizes:
// m_j neighbours in class j with
//   sum_j m_j = k_i,  m_j <= counts_j (m_i <= counts_i - 1),
//   m_j = 0 where nu_adj(i,j) < 0,  sum_j m_j nu_adj(i,j) = tau_i.
// With first_only the search stops at the first hit (feasibility probe).
inline std::vector<std::vector<i64>> neighborhood_profiles(const ValencyArray& v,
                                                           const std::vector<i64>& counts,
                                                           int i, bool first_only = false) {
    const int r = v.r();
    const i64 t = v.params.t;
    std::vector<i64> nu(r), cap(r);
    for (int j = 0; j < r; ++j) {
        nu[j] = (1 - t) + pair_ct(v, i, j);
        cap[j] = counts[j] - (j == i ? 1 : 0);
        if (nu[j] < 0) cap[j] = 0;
    }
    const i64 degree = v.k(i);
    const i64 walks = v.tau(i);

    std::vector<std::vector<i64>> out;
    std::vector<i64> m(r, 0);
    std::vector<i64> cap_suffix(r + 1, 0);
    for (int j = r - 1; j >= 0; --j) cap_suffix[j] = cap_suffix[j + 1] + cap[j];

    std::function<bool(int, i64, i64)> dfs = [&](int j, i64 used, i64 walk_acc) -> bool {
        if (j == r) {
            if (used == degree && walk_acc == walks) {
                out.push_back(m);
                return first_only;
            }
            return false;
        }
        if (used + cap_suffix[j] < degree) return false;
        for (i64 take = 0; take <= std::min(cap[j], degree - used); ++take) {
            const i64 w = walk_acc + take * nu[j];
            if (w > walks) break;  // nu[j] >= 0 wherever cap[j] > 0
            m[j] = take;
            const bool stop = dfs(j + 1, used + take, w);
            m[j] = 0;
            if (stop) return true;
        }
        return false;
    };
    dfs(0, 0, 0);
    return out;
}

// Depth-first enumeration fixing n_r, n_{r-1}, ... with the rational bounds
// pruning each level; n_1 is forced by the vertex-count sum. A leaf is kept
// when the equations hold and the minimum-valency class admits at least one
// neighbourhood profile (without the latter a fifth, walk-infeasible array
// survives at t = 9). Emitted arrays are sorted by counts.
inline std::vector<MultiplicityArray> enumerate_multiplicity_arrays(const ValencyArray& v) {
    const int r = v.r();
    const i64 n = v.params.n;
    std::vector<MultiplicityArray> out;
    std::vector<i64> counts(r, 0);

    std::function<void(int, i64)> dfs = [&](int i, i64 used) {
        if (i == 0) {
            counts[0] = n - used;
            if (counts[0] >= 1) {
                MultiplicityArray ma{v, counts};
                if (check_multiplicity_equations(ma).all() &&
                    !neighborhood_profiles(v, counts, 0, /*first_only=*/true).empty())
                    out.push_back(std::move(ma));
            }
            counts[0] = 0;
            return;
        }
        std::vector<i64> fixed(counts.begin() + i + 1, counts.end());
        auto [lo, hi] = lemma52_bounds(v, i, fixed);
        lo = std::max<i64>(lo, 1);
        hi = std::min<i64>(hi, n - used - i);  // leave >= 1 per remaining class
        for (i64 c = lo; c <= hi; ++c) {
            counts[i] = c;
            dfs(i - 1, used + c);
            counts[i] = 0;
        }
    };
    dfs(r - 1, 0);
    std::sort(out.begin(), out.end(),
              [](const MultiplicityArray& x, const MultiplicityArray& y) { return x.counts < y.counts; });
    return out;
}

enum class CandidateStatus { open, refuted, flagged };

inline const char* to_string(CandidateStatus s) {
    switch (s) {
        case CandidateStatus::open: return "open";
        case CandidateStatus::refuted: return "refuted";
        case CandidateStatus::flagged: return "flagged";
    }
    return "?";
}

// One surviving parameter triple plus its elimination record.
struct Candidate {
    SpectralParams params;
    ValencyArray valencies;
    std::vector<i64> counts;
    CandidateStatus status = CandidateStatus::open;
    std::string reason;  // set when status leaves open
};

} // namespace threeev
