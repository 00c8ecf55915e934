#pragma once

// Exact certification that a concrete graph has exactly three distinct
// eigenvalues theta0 > theta1 > theta2.
//
// The certificate is identity-based, never numeric: with
// alpha_v = sqrt(d_v + theta1 theta2) the rank-one identity
//     (A - theta1 I)(A - theta2 I) = alpha alpha^T
// is checked entry by entry — diagonal d_v + theta1 theta2 = alpha_v^2,
// off-diagonal nu_{x,y} - (theta1+theta2) A_{x,y} = alpha_x alpha_y — and the
// cube identity fixes the closed 3-walk count at every vertex.

#include "graph.hpp"
#include "quad.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <vector>

namespace threeev {

// --- minimal polynomial -----------------------------------------------------
//
// deg(minpoly) = number of distinct eigenvalues for a symmetric matrix. We
// probe degrees 1..3 by solving the first few entries of
// A^k = c_{k-1} A^{k-1} + ... + c_0 I for rational c and verifying the claimed
// combination on every entry. Entries of A^3 stay tiny, so i64 is plenty.

namespace detail {

using Mat = std::vector<std::vector<i64>>;

inline Mat identity(int n) {
    Mat m(n, std::vector<i64>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat adjacency(const Graph& g) {
    const int n = g.order();
    Mat m(n, std::vector<i64>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = g.adjacent(i, j);
    return m;
}

inline Mat matmul(const Mat& a, const Mat& b) {
    const int n = static_cast<int>(a.size());
    Mat c(n, std::vector<i64>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] = add(c[i][j], mul(a[i][k], b[k][j]));
        }
    return c;
}

// Solve target = sum_k coef_k basis_k over the rationals by elimination on a
// full copy of the flattened system; returns integer coefficients when the
// solution is integral (monic integer matrices have integer minimal
// polynomials), and verifies the combination exhaustively.
inline std::optional<std::vector<i64>> integer_combination(const std::vector<Mat>& basis,
                                                           const Mat& target) {
    const int n = static_cast<int>(target.size());
    const int k = static_cast<int>(basis.size());
    // Gaussian elimination with rational bookkeeping via long double would be
    // inexact; instead solve small k x k systems drawn from independent
    // entries, then verify exactly.
    std::vector<std::pair<int, int>> picked;
    std::vector<std::vector<i64>> rows;  // each row: basis entries + target
    for (int i = 0; i < n && static_cast<int>(picked.size()) < k; ++i)
        for (int j = 0; j < n && static_cast<int>(picked.size()) < k; ++j) {
            std::vector<i64> row(k + 1);
            for (int b = 0; b < k; ++b) row[b] = basis[b][i][j];
            row[k] = target[i][j];
            // keep the row if it increases the rank of the collected system
            std::vector<std::vector<i64>> trial = rows;
            trial.push_back(row);
            // fraction-free elimination to test rank over the first k columns
            auto m = trial;
            int rank = 0;
            for (int col = 0; col < k && rank < static_cast<int>(m.size()); ++col) {
                int piv = -1;
                for (int rr = rank; rr < static_cast<int>(m.size()); ++rr)
                    if (m[rr][col] != 0) { piv = rr; break; }
                if (piv < 0) continue;
                std::swap(m[rank], m[piv]);
                for (int rr = 0; rr < static_cast<int>(m.size()); ++rr) {
                    if (rr == rank || m[rr][col] == 0) continue;
                    const i64 a = m[rank][col], b = m[rr][col];
                    i64 g = 0;
                    for (int cc = 0; cc <= k; ++cc) {
                        m[rr][cc] = sub(mul(m[rr][cc], a), mul(m[rank][cc], b));
                        g = std::gcd(g, m[rr][cc] < 0 ? -m[rr][cc] : m[rr][cc]);
                    }
                    if (g > 1)
                        for (int cc = 0; cc <= k; ++cc) m[rr][cc] /= g;
                }
                ++rank;
            }
            if (rank == static_cast<int>(trial.size())) {
                rows = trial;
                picked.emplace_back(i, j);
            }
        }
    if (static_cast<int>(rows.size()) < k) return std::nullopt;

    // Cramer solve of the k x k system with integer determinants.
    std::function<i64(const std::vector<std::vector<i64>>&)> det =
        [&](const std::vector<std::vector<i64>>& m) -> i64 {
        const int sz = static_cast<int>(m.size());
        if (sz == 1) return m[0][0];
        if (sz == 2) return sub(mul(m[0][0], m[1][1]), mul(m[0][1], m[1][0]));
        i64 s = 0;
        for (int c = 0; c < sz; ++c) {
            std::vector<std::vector<i64>> minor;
            for (int rr = 1; rr < sz; ++rr) {
                std::vector<i64> mr;
                for (int cc = 0; cc < sz; ++cc)
                    if (cc != c) mr.push_back(m[rr][cc]);
                minor.push_back(mr);
            }
            const i64 term = mul(m[0][c], det(minor));
            s = (c % 2 == 0) ? add(s, term) : sub(s, term);
        }
        return s;
    };

    std::vector<std::vector<i64>> A(k, std::vector<i64>(k));
    std::vector<i64> rhs(k);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) A[r][c] = rows[r][c];
        rhs[r] = rows[r][k];
    }
    const i64 D = det(A);
    if (D == 0) return std::nullopt;
    std::vector<i64> coef(k);
    for (int c = 0; c < k; ++c) {
        auto Ac = A;
        for (int r = 0; r < k; ++r) Ac[r][c] = rhs[r];
        const i64 Dc = det(Ac);
        if (Dc % D != 0) return std::nullopt;  // non-integer: not a valid minpoly here
        coef[c] = Dc / D;
    }
    // exhaustive verification
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            i64 v = 0;
            for (int b = 0; b < k; ++b) v = add(v, mul(coef[b], basis[b][i][j]));
            if (v != target[i][j]) return std::nullopt;
        }
    return coef;
}

} // namespace detail

struct SpectrumEntry {
    Quad value;
    i64 multiplicity = 0;
};

enum class SpectrumStatus { ok, not_three_eigenvalues, unsupported_algebraic };

struct SpectrumResult {
    SpectrumStatus status = SpectrumStatus::ok;
    std::vector<SpectrumEntry> eigenvalues;  // sorted descending when ok
    std::string note;
};

// Distinct eigenvalues with multiplicities via the minimal polynomial.
// Supports degree <= 3 splitting into rational roots or one rational root
// plus a quadratic pair; anything of higher degree is reported as not a
// three-eigenvalue graph.
inline SpectrumResult distinct_spectrum(const Graph& g) {
    SpectrumResult res;
    if (!g.connected()) throw std::invalid_argument("distinct_spectrum: graph must be connected");
    const int n = g.order();
    const auto I = detail::identity(n);
    const auto A = detail::adjacency(g);
    const auto A2 = detail::matmul(A, A);
    const auto A3 = detail::matmul(A2, A);

    std::vector<Quad> roots;
    auto quadratic_roots = [](i64 u, i64 v) {
        // roots of x^2 + u x + v, known real for a symmetric matrix
        std::vector<Quad> rs;
        const i64 disc = u * u - 4 * v;
        if (disc < 0) return rs;
        if (auto r = isqrt_exact(disc)) {
            rs.emplace_back(-u + *r, 0, 2, 1);
            rs.emplace_back(-u - *r, 0, 2, 1);
        } else {
            rs.emplace_back(-u, 1, 2, disc);
            rs.emplace_back(-u, -1, 2, disc);
        }
        return rs;
    };

    if (auto c = detail::integer_combination({I}, A)) {
        // A = c0 I only for the 1-vertex graph
        roots = {Quad((*c)[0])};
    } else if (auto c2 = detail::integer_combination({I, A}, A2)) {
        // x^2 - c1 x - c0 = 0
        roots = quadratic_roots(-(*c2)[1], -(*c2)[0]);
    } else if (auto c3 = detail::integer_combination({I, A, A2}, A3)) {
        // x^3 = c2 x^2 + c1 x + c0; a rational root must exist (and is an
        // integer dividing c0) for the spectrum to stay within one radical
        const i64 c0 = (*c3)[0], c1 = (*c3)[1], c2v = (*c3)[2];
        auto eval = [&](i64 x) { return ((x - c2v) * x - c1) * x - c0; };
        std::optional<i64> root;
        if (c0 == 0) root = 0;
        for (i64 d = 1; !root && d * d <= (c0 < 0 ? -c0 : c0); ++d) {
            if (c0 % d) continue;
            for (i64 cand : {d, -d, c0 / d, -(c0 / d)})
                if (eval(cand) == 0) { root = cand; break; }
        }
        if (!root) {
            res.status = SpectrumStatus::unsupported_algebraic;
            res.note = "cubic minimal polynomial with no rational root";
            return res;
        }
        // x^3 - c2 x^2 - c1 x - c0 = (x - root)(x^2 + u x + v)
        const i64 u = *root - c2v;
        const i64 v = *root != 0 ? c0 / *root : -c1;
        roots = {Quad(*root)};
        for (const Quad& q : quadratic_roots(u, v)) roots.push_back(q);
        if (roots.size() != 3) {
            res.status = SpectrumStatus::unsupported_algebraic;
            res.note = "complex quadratic factor (not a symmetric spectrum)";
            return res;
        }
    } else {
        res.status = SpectrumStatus::not_three_eigenvalues;
        res.note = "minimal polynomial degree exceeds 3";
        return res;
    }

    std::sort(roots.begin(), roots.end(), [](const Quad& a, const Quad& b) { return b < a; });

    // Multiplicities: theta0 is simple (Perron); the rest solve
    //   m_a + m_b = n - 1,  m_a la + m_b lb = -theta0   (trace zero)
    res.eigenvalues.clear();
    if (roots.size() == 1) {
        res.eigenvalues.push_back({roots[0], n});
    } else if (roots.size() == 2) {
        // 1 * theta0 + m1 * theta1 = 0 and 1 + m1 = n
        res.eigenvalues.push_back({roots[0], 1});
        res.eigenvalues.push_back({roots[1], n - 1});
        if (!(roots[0] + Quad(n - 1) * roots[1] == Quad(0))) {
            res.status = SpectrumStatus::unsupported_algebraic;
            res.note = "trace check failed for two-eigenvalue spectrum";
            return res;
        }
    } else {
        const Quad &t0 = roots[0], &t1 = roots[1], &t2 = roots[2];
        // If the lower pair are conjugates they share a multiplicity.
        if (!t1.is_rational() && !t2.is_rational()) {
            if ((n - 1) % 2 != 0 || !(t0 + Quad((n - 1) / 2) * (t1 + t2) == Quad(0))) {
                res.status = SpectrumStatus::unsupported_algebraic;
                res.note = "conjugate pair multiplicities fail the trace";
                return res;
            }
            res.eigenvalues = {{t0, 1}, {t1, (n - 1) / 2}, {t2, (n - 1) / 2}};
        } else if (!t0.is_rational() && !t2.is_rational() && t1.is_rational()) {
            // theta0 irrational: its conjugate is theta2 with multiplicity 1
            if (!(t0 + t2 + Quad(n - 2) * t1 == Quad(0))) {
                res.status = SpectrumStatus::unsupported_algebraic;
                res.note = "trace fails for irrational spectral radius";
                return res;
            }
            res.eigenvalues = {{t0, 1}, {t1, n - 2}, {t2, 1}};
        } else {
            // all rational (hence integers): solve the 2x2 system exactly
            const i64 la = t1.p / t1.den, lb = t2.p / t2.den;
            if (t1.den != 1 || t2.den != 1 || t0.den != 1) {
                res.status = SpectrumStatus::unsupported_algebraic;
                res.note = "non-integer rational eigenvalue";
                return res;
            }
            const i64 theta0 = t0.p;
            const i64 num = -theta0 - (n - 1) * lb;
            if (num % (la - lb) != 0) {
                res.status = SpectrumStatus::unsupported_algebraic;
                res.note = "non-integer multiplicity";
                return res;
            }
            const i64 ma = num / (la - lb), mb = (n - 1) - ma;
            if (ma < 1 || mb < 1) {
                res.status = SpectrumStatus::unsupported_algebraic;
                res.note = "nonpositive multiplicity";
                return res;
            }
            res.eigenvalues = {{t0, 1}, {t1, ma}, {t2, mb}};
        }
    }
    return res;
}

// --- rank-one certificate ----------------------------------------------------

struct CertFailure {
    int x = -1, y = -1;  // y == x for diagonal entries
    std::string what;
};

struct Certificate {
    bool ok = false;
    Quad theta0, theta1, theta2;
    std::vector<SqClass> alpha;  // per-vertex alpha_v = beta sqrt(omega)
    std::vector<CertFailure> failures;
    std::uint64_t edges_hash = 0;
};

// Entrywise verification of the rank-one identity plus Eq-style common
// neighbour checks for every pair. alpha_v^2 = d_v + theta1 theta2 must be a
// nonnegative integer for every vertex (else a failure entry, not an
// exception).
inline Certificate certify_three_ev(const Graph& g, const Quad& th0, const Quad& th1, const Quad& th2) {
    if (!(th0 > th1 && th1 > th2))
        throw std::invalid_argument("certify_three_ev: need theta0 > theta1 > theta2");
    Certificate cert;
    cert.theta0 = th0;
    cert.theta1 = th1;
    cert.theta2 = th2;
    cert.edges_hash = edges_hash(g);
    const int n = g.order();
    const Quad prod = th1 * th2;
    const Quad sum = th1 + th2;

    cert.alpha.assign(n, SqClass{});
    std::vector<bool> alpha_ok(n, false);
    for (int v = 0; v < n; ++v) {
        const Quad a2 = Quad(g.degree(v)) + prod;
        if (!a2.is_integer() || a2.p < 0) {
            cert.failures.push_back({v, v, "alpha_" + std::to_string(v) + "^2 = " + a2.str() +
                                               " is not a nonnegative integer"});
            continue;
        }
        if (a2.p == 0) {
            cert.failures.push_back({v, v, "alpha_" + std::to_string(v) + " vanishes"});
            continue;
        }
        cert.alpha[v] = squarefree_split(a2.p);
        alpha_ok[v] = true;
    }

    for (int x = 0; x < n && cert.failures.size() < 64; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (!alpha_ok[x] || !alpha_ok[y]) continue;
            const Quad lhs = Quad(g.common_neighbors(x, y)) - (g.adjacent(x, y) ? sum : Quad(0));
            // alpha_x alpha_y = beta_x beta_y sqrt(omega_x omega_y)
            const Quad rhs = Quad(0, mul(cert.alpha[x].beta, cert.alpha[y].beta), 1,
                                  mul(cert.alpha[x].omega, cert.alpha[y].omega));
            if (!(lhs == rhs))
                cert.failures.push_back({x, y, "nu(" + std::to_string(x) + "," + std::to_string(y) +
                                                   ") gives " + lhs.str() + " != " + rhs.str()});
        }
    cert.ok = cert.failures.empty();
    return cert;
}

// Diagonal of the cube identity: closed 3-walks at v equal
// -(theta1+theta2) theta1 theta2 + (theta0+theta1+theta2) alpha_v^2,
// with the left side counted directly by triangle enumeration.
inline bool closed_walk3_check(const Graph& g, const Certificate& cert) {
    if (!cert.ok) throw std::invalid_argument("closed_walk3_check: certificate not ok");
    const Quad coeff = cert.theta0 + cert.theta1 + cert.theta2;
    const Quad base = -(cert.theta1 + cert.theta2) * cert.theta1 * cert.theta2;
    for (int v = 0; v < g.order(); ++v) {
        const Quad expect = base + coeff * Quad(cert.alpha[v].square());
        if (!(Quad(g.closed_walks3_at(v)) == expect)) return false;
    }
    return true;
}

} // namespace threeev
