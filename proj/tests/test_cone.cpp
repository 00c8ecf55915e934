#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <threeev/cone.hpp>

using namespace threeev;

TEST_CASE("cone bounds at t = 3") {
    auto b = cone_bounds(3);
    CHECK(b.lower_a == 20);   // strict: n > 20
    CHECK(b.upper_a == 29);
    CHECK(b.upper_b == 29);   // (2t-2)^2/(t-2) + 6t - 5 = 16/1 + 13
    CHECK(b.lower_d == 22);   // 12 + ceil(sqrt(96)) = 12 + 10
    CHECK(b.feasible());
    CHECK(b.window_lo == 22);
    CHECK(b.window_hi == 29);
}

TEST_CASE("cone window closes for every t >= 7") {
    auto b7 = cone_bounds(7);
    CHECK(b7.lower_d == 69);  // 36 + ceil(sqrt(1056)) = 36 + 33
    CHECK(b7.upper_b == 65);
    CHECK_FALSE(b7.feasible());
    for (i64 t = 7; t <= 200; ++t) CHECK_FALSE(cone_bounds(t).feasible());
    // the window is open only up to t = 5; at t = 6 it is already empty but
    // the case search still runs (the published argument rounds to t <= 6)
    for (i64 t = 3; t <= 5; ++t) CHECK(cone_bounds(t).feasible());
    CHECK_FALSE(cone_bounds(6).feasible());
}

TEST_CASE("t = 3 case search eliminates both factorisations") {
    auto rep = cone_case_search(3);
    CHECK(rep.survivors.empty());

    bool saw_surd = false, saw_int = false;
    for (const auto& cc : rep.eliminated) {
        if (cc.omega == 2 && cc.beta_x == 2 && cc.beta_y == 1) {
            // (2 sqrt 2, sqrt 2): n = 22, s = 7 survives the quadratic but n1 = 0
            CHECK(cc.n == 22);
            if (cc.s.has_value()) {
                CHECK(*cc.s == 7);  // s = 9 dies earlier on m integrality
                REQUIRE(cc.n1.has_value());
                CHECK(*cc.n1 == 0);
                saw_surd = true;
            }
        }
        if (cc.omega == 1 && cc.beta_x == 4 && cc.beta_y == 1) {
            CHECK(cc.n == 29);
            CHECK(cc.verdict == "non-square discriminant 193");
            saw_int = true;
        }
    }
    CHECK(saw_surd);
    CHECK(saw_int);
}

TEST_CASE("case search is empty for t = 4, 5, 6") {
    for (i64 t = 4; t <= 6; ++t) {
        auto rep = cone_case_search(t);
        CHECK(rep.survivors.empty());
        CHECK(!rep.eliminated.empty());
    }
}

TEST_CASE("perron self-check on every enumerated factorisation") {
    for (i64 t = 3; t <= 6; ++t) {
        auto rep = cone_case_search(t);
        for (const auto& cc : rep.eliminated) {
            // n reconstructs from the factorisation
            CHECK(cc.n == cc.omega * (cc.beta_x + cc.beta_y) * (cc.beta_x + cc.beta_y) + 1 + t);
            // and alpha_x alpha_y = 2(t-1) exactly
            CHECK(cc.omega * cc.beta_x * cc.beta_y == 2 * (t - 1));
            if (cc.s && cc.n1) {
                // n1 alpha_x + n2 alpha_y = s (alpha_x + alpha_y), divided by sqrt(omega)
                const i64 n2 = cc.n - 1 - *cc.n1;
                CHECK(*cc.n1 * cc.beta_x + n2 * cc.beta_y == *cc.s * (cc.beta_x + cc.beta_y));
            }
        }
    }
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(cone_bounds(2), std::invalid_argument);
    CHECK_THROWS_AS(cone_case_search(7), std::invalid_argument);
}
