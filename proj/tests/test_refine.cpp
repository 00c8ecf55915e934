#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <threeev/refine.hpp>

#include <functional>

using namespace threeev;

namespace {

Candidate t4_row() {
    return {{4, 31, 15, 9}, {{4, 31, 15, 9}, 1, {1, 2, 3, 4}}, {5, 10, 5, 11},
            CandidateStatus::open, {}};
}
Candidate t5_row36() {
    return {{5, 36, 19, 9}, {{5, 36, 19, 9}, 2, {1, 2, 3}}, {6, 12, 18},
            CandidateStatus::open, {}};
}
Candidate t5_row45() {
    return {{5, 45, 28, 12}, {{5, 45, 28, 12}, 1, {1, 2, 4, 5}}, {6, 3, 3, 33},
            CandidateStatus::open, {}};
}
Candidate t7_row() {
    return {{7, 45, 20, 8}, {{7, 45, 20, 8}, 1, {2, 3, 4, 5}}, {6, 27, 6, 6},
            CandidateStatus::open, {}};
}

// brute-force profile oracle: plain nested recursion, no pruning
std::vector<std::vector<i64>> oracle_profiles(const Candidate& c, int i) {
    const ValencyArray& v = c.valencies;
    const int r = v.r();
    std::vector<std::vector<i64>> out;
    std::vector<i64> m(r, 0);
    std::function<void(int, i64)> rec = [&](int j, i64 left) {
        if (j == r) {
            if (left != 0) return;
            i64 walks = 0;
            for (int l = 0; l < r; ++l) {
                if (m[l] > 0 && nu_pair(v, i, l, true) < 0) return;
                walks += m[l] * nu_pair(v, i, l, true);
            }
            if (walks == v.tau(i)) out.push_back(m);
            return;
        }
        const i64 cap = c.counts[j] - (j == i ? 1 : 0);
        for (i64 take = 0; take <= std::min(cap, left); ++take) {
            m[j] = take;
            rec(j + 1, left - take);
            m[j] = 0;
        }
    };
    rec(0, v.k(i));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("nu_pair examples") {
    ValencyArray t5{{5, 36, 19, 9}, 2, {1, 2, 3}};
    CHECK(nu_pair(t5, 0, 0, true) == -2);
    ValencyArray t4{{4, 31, 15, 9}, 1, {1, 2, 3, 4}};
    CHECK(nu_pair(t4, 0, 3, false) == 4);
    CHECK(nu_pair(t4, 1, 1, false) == 4);  // omega beta^2, always positive
}

TEST_CASE("closed_walks3 examples") {
    ValencyArray t4{{4, 31, 15, 9}, 1, {1, 2, 3, 4}};
    CHECK(closed_walks3(t4, 0) == 0);
    ValencyArray t5b{{5, 45, 28, 12}, 1, {1, 2, 4, 5}};
    CHECK(closed_walks3(t5b, 0) == 4);
    ValencyArray t5{{5, 36, 19, 9}, 2, {1, 2, 3}};
    CHECK(closed_walks3(t5, 0) == 10);
}

TEST_CASE("profiles of the surviving rows") {
    {
        auto c = t4_row();
        auto got = enumerate_profiles(c, 0);
        REQUIRE(got.size() == 1);
        CHECK(got[0].neighbor_counts == std::vector<i64>{0, 0, 5, 0});
    }
    {
        auto c = t5_row45();
        auto got = enumerate_profiles(c, 0);
        REQUIRE(got.size() == 1);
        CHECK(got[0].neighbor_counts == std::vector<i64>{0, 0, 2, 4});
    }
    {
        // class 2 of the (45,28,12) row cannot reach its 38 triangles
        auto c = t5_row45();
        CHECK(enumerate_profiles(c, 1).empty());
    }
}

TEST_CASE("profile enumeration equals brute force over the candidate corpus") {
    int checked = 0;
    for (const Candidate& c : {t4_row(), t5_row36(), t5_row45(), t7_row()})
        for (int i = 0; i < c.valencies.r(); ++i) {
            std::vector<std::vector<i64>> got;
            for (const auto& pr : enumerate_profiles(c, i)) got.push_back(pr.neighbor_counts);
            std::sort(got.begin(), got.end());
            REQUIRE(got == oracle_profiles(c, i));
            ++checked;
        }
    CHECK(checked == 15);  // 4 + 3 + 4 + 4 classes
}

TEST_CASE("double counting: saturation on the t=4 row") {
    auto c = t4_row();
    auto cert = double_count_check(c, 0, enumerate_profiles(c, 0));
    REQUIRE(cert.has_value());
    CHECK(cert->kind == "double-count-saturation");
    CHECK(cert->witness == std::vector<i64>{5, 1});
}

TEST_CASE("double counting: convexity on the (45,28,12) row") {
    auto c = t5_row45();
    auto cert = double_count_check(c, 0, enumerate_profiles(c, 0));
    REQUIRE(cert.has_value());
    CHECK(cert->kind == "double-count-convexity");
    CHECK(cert->witness == std::vector<i64>{18, 15});
}

TEST_CASE("double counting needs a pair of vertices") {
    auto c = t4_row();
    c.counts[0] = 1;  // hypothetical single vertex in the class
    CHECK_FALSE(double_count_check(c, 0, enumerate_profiles(c, 0)).has_value());
}

TEST_CASE("quotient search refutes (36,19,9) with the walk witness") {
    auto res = quotient_matrix_search(t5_row36());
    CHECK(res.applicable);
    CHECK(res.solutions.empty());
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->kind == "quotient-walk-mismatch");
    CHECK(res.certificate->witness == std::vector<i64>{141, 145});
}

TEST_CASE("quotient search is inapplicable for four classes") {
    auto res = quotient_matrix_search(t4_row());
    CHECK_FALSE(res.applicable);
}

TEST_CASE("quotient search accepts a strongly regular recast (r = 1)") {
    // Petersen: n = 10, spectrum {3, 1^5, (-2)^4}: s = 3, t = 2, m = 4
    Candidate petersen{{2, 10, 3, 4}, {{2, 10, 3, 4}, 1, {1}}, {10}, CandidateStatus::open, {}};
    auto res = quotient_matrix_search(petersen);
    CHECK(res.applicable);
    REQUIRE(res.solutions.size() == 1);
    CHECK(res.solutions[0].b == std::vector<std::vector<i64>>{{3}});
}

TEST_CASE("quotient search accepts the Petersen cone recast (r = 2)") {
    Candidate cone{{2, 11, 5, 5}, {{2, 11, 5, 5}, 2, {1, 2}}, {10, 1}, CandidateStatus::open, {}};
    auto res = quotient_matrix_search(cone);
    CHECK(res.applicable);
    REQUIRE(res.solutions.size() == 1);
    CHECK(res.solutions[0].b == std::vector<std::vector<i64>>{{3, 1}, {10, 0}});
}

TEST_CASE("equality flag") {
    CHECK(br_equality_flag({7, 45, 20, 8}));        // (8+1)(8+2)/2 = 45
    CHECK_FALSE(br_equality_flag({4, 31, 15, 9}));
}

TEST_CASE("refute_all eliminates all four rows with the expected reasons") {
    auto report = refute_all({t4_row(), t5_row36(), t5_row45(), t7_row()});
    REQUIRE(report.entries.size() == 4);
    CHECK(report.open_count == 0);
    CHECK(report.flagged_count == 0);

    const auto& e = report.entries;
    CHECK(e[0].candidate.status == CandidateStatus::refuted);
    CHECK(e[0].candidate.reason.starts_with("double-count-saturation"));
    CHECK(e[1].candidate.reason.starts_with("quotient-walk-mismatch"));
    CHECK(e[2].candidate.reason.starts_with("double-count-convexity"));
    CHECK(e[3].candidate.reason.starts_with("bell-rowlinson-equality"));
}

TEST_CASE("without the uniqueness rule exactly the t=7 row stays flagged") {
    RefineOptions opt;
    opt.apply_br_uniqueness = false;
    auto report = refute_all({t4_row(), t5_row36(), t5_row45(), t7_row()}, opt);
    CHECK(report.open_count == 0);
    CHECK(report.flagged_count == 1);
    CHECK(report.entries[3].candidate.status == CandidateStatus::flagged);
}

TEST_CASE("certificates replay: every recorded inequality still holds") {
    auto report = refute_all({t4_row(), t5_row36(), t5_row45(), t7_row()});
    for (const auto& entry : report.entries)
        for (const auto& cert : entry.certificates) {
            if (cert.kind == "double-count-saturation" || cert.kind == "double-count-convexity")
                CHECK(cert.witness[0] > cert.witness[1]);
            if (cert.kind == "quotient-walk-mismatch")
                CHECK(cert.witness[0] != cert.witness[1]);
        }
}

TEST_CASE("quotient witness replays from raw candidate data") {
    // rebuild row 1 of the (36,19,9) system by hand: b_11 = 0 is forced,
    // the row-sum and eigenvector equations pin (b_12, b_13), and the
    // recorded 2-walk mismatch must reappear
    auto c = t5_row36();
    const auto& v = c.valencies;
    REQUIRE(nu_pair(v, 0, 0, true) < 0);
    const i64 s = v.params.s, t = v.params.t;
    const i64 b13 = (s * v.betas[0] - v.k(0) * v.betas[1]) / (v.betas[2] - v.betas[1]);
    const i64 b12 = v.k(0) - b13;
    CHECK(b12 == 2);
    CHECK(b13 == 5);
    i64 B = 0;
    for (int j = 0; j < v.r(); ++j) B += c.counts[j] * v.betas[j];
    const i64 walk_lhs = b12 * v.k(1) + b13 * v.k(2);
    const i64 walk_rhs = (1 - t) * v.k(0) + t + v.omega * v.betas[0] * B;
    CHECK(walk_lhs == 141);
    CHECK(walk_rhs == 145);
    auto res = quotient_matrix_search(c);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->witness == std::vector<i64>{walk_lhs, walk_rhs});
}

TEST_CASE("convexity witness replays from raw candidate data") {
    auto c = t5_row45();
    auto profiles = enumerate_profiles(c, 0);
    i64 q3 = profiles[0].neighbor_counts[2];
    for (const auto& pr : profiles) q3 = std::min(q3, pr.neighbor_counts[2]);
    const i64 e = c.counts[0] * q3;   // 6 * 2 forced class-1 -> class-3 edges
    const i64 nj = c.counts[2];       // over 3 vertices
    const i64 lhs = (nj - e % nj) * ((e / nj) * (e / nj - 1) / 2) +
                    (e % nj) * ((e / nj + 1) * (e / nj) / 2);
    const i64 rhs = (c.counts[0] * (c.counts[0] - 1) / 2) * pair_ct(c.valencies, 0, 0);
    CHECK(lhs == 18);
    CHECK(rhs == 15);
    CHECK(lhs > rhs);
}

TEST_CASE("quotient solutions satisfy all constraint families entrywise") {
    for (Candidate base : {Candidate{{2, 10, 3, 4}, {{2, 10, 3, 4}, 1, {1}}, {10},
                                     CandidateStatus::open, {}},
                           Candidate{{2, 11, 5, 5}, {{2, 11, 5, 5}, 2, {1, 2}}, {10, 1},
                                     CandidateStatus::open, {}},
                           Candidate{{2, 14, 8, 7}, {{2, 14, 8, 7}, 2, {1, 2}}, {7, 7},
                                     CandidateStatus::open, {}}}) {
        const auto& v = base.valencies;
        const i64 t = v.params.t, s = v.params.s;
        i64 B = 0;
        for (int j = 0; j < v.r(); ++j) B += base.counts[j] * v.betas[j];
        auto res = quotient_matrix_search(base);
        REQUIRE(!res.solutions.empty());
        for (const auto& qm : res.solutions)
            for (int i = 0; i < v.r(); ++i) {
                i64 row_sum = 0, eig = 0, walk = 0;
                for (int j = 0; j < v.r(); ++j) {
                    REQUIRE(qm.b[i][j] >= 0);
                    row_sum += qm.b[i][j];
                    eig += qm.b[i][j] * v.betas[j];
                    walk += qm.b[i][j] * v.k(j);
                    REQUIRE(base.counts[i] * qm.b[i][j] == base.counts[j] * qm.b[j][i]);
                }
                REQUIRE(row_sum == v.k(i));
                REQUIRE(eig == s * v.betas[i]);
                REQUIRE(walk == (1 - t) * v.k(i) + t + v.omega * v.betas[i] * B);
                if (nu_pair(v, i, i, true) < 0) REQUIRE(qm.b[i][i] == 0);
            }
    }
}

TEST_CASE("empty input gives an empty report") {
    auto report = refute_all({});
    CHECK(report.entries.empty());
    CHECK(report.open_count == 0);
    CHECK(report.flagged_count == 0);
}

TEST_CASE("soundness: recasts of real graphs are never refuted") {
    // Petersen (r=1), Petersen cone (r=2), Fano graph (r=2)
    std::vector<Candidate> reals = {
        {{2, 10, 3, 4}, {{2, 10, 3, 4}, 1, {1}}, {10}, CandidateStatus::open, {}},
        {{2, 11, 5, 5}, {{2, 11, 5, 5}, 2, {1, 2}}, {10, 1}, CandidateStatus::open, {}},
        {{2, 14, 8, 7}, {{2, 14, 8, 7}, 2, {1, 2}}, {7, 7}, CandidateStatus::open, {}},
    };
    auto report = refute_all(reals);
    CHECK(report.open_count == 3);
    for (const auto& e : report.entries) CHECK(e.candidate.status == CandidateStatus::open);
}
