#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <threeev/spectral.hpp>

using namespace threeev;

namespace {
// published |S(t)| column
constexpr i64 kSpectralCounts[27] = {128, 196, 277, 375, 492, 610, 748, 898, 546,
                                     497, 455, 409, 377, 340, 311, 273, 248, 220,
                                     189, 163, 143, 118, 95,  76,  61,  43,  27};
}

TEST_CASE("n_max exact values") {
    CHECK(n_max(3) == 60);
    CHECK(n_max(10) == 200);
    CHECK(n_max(11) == 183);
    CHECK(n_max(29) == 508);
    CHECK_THROWS_AS(n_max(2), std::invalid_argument);
    CHECK_THROWS_AS(n_max(30), std::invalid_argument);
}

TEST_CASE("condition report for known rows") {
    SpectralParams p{4, 31, 15, 9};
    auto rep = check_spectral_conditions(p);
    CHECK(rep.all());
    CHECK(rep.edge_double == 390);
    CHECK(rep.walk3_sum == 2820);

    SpectralParams q{3, 22, 7, 7};
    auto rq = check_spectral_conditions(q);
    CHECK(rq.all());
    CHECK(rq.edge_double == 126);
    CHECK(rq.walk3_sum == 168);
}

TEST_CASE("linkage has no integral m for (t=3, n=22, s=9)") {
    // m = (n - 1 + s)/(t + 1) = 30/4
    CHECK((22 - 1 + 9) % (3 + 1) != 0);
    SpectralParams bad{3, 22, 9, 7};  // wrong m on purpose
    CHECK_THROWS_AS(check_spectral_conditions(bad), std::invalid_argument);
}

TEST_CASE("enumerate_spectral reproduces the published counts") {
    for (int t = kTMin; t <= kTMax; ++t) {
        auto list = enumerate_spectral(t);
        CHECK(static_cast<i64>(list.size()) == kSpectralCounts[t - kTMin]);
        for (const auto& p : list) {
            REQUIRE(p.linkage_holds());
            auto rep = check_spectral_conditions(p);
            REQUIRE(rep.all());
            REQUIRE(rep.edge_double % 2 == 0);
            REQUIRE(rep.edge_double / 2 < p.n * p.s / 2);  // below the regular edge bound
        }
    }
}

TEST_CASE("S(4) contains the surviving row and is (n, s)-sorted") {
    auto list = enumerate_spectral(4);
    const SpectralParams want{4, 31, 15, 9};
    CHECK(std::find(list.begin(), list.end(), want) != list.end());
    for (std::size_t i = 1; i < list.size(); ++i) {
        const auto &a = list[i - 1], &b = list[i];
        CHECK(std::pair{a.n, a.s} < std::pair{b.n, b.s});
    }
}

TEST_CASE("two runs agree (determinism)") {
    CHECK(enumerate_spectral(17) == enumerate_spectral(17));
}

TEST_CASE("optional n lower bound only shrinks the list") {
    SpectralOptions strict;
    strict.apply_n_lower_bound = true;
    for (int t : {3, 12, 29}) {
        auto base = enumerate_spectral(t);
        auto cut = enumerate_spectral(t, strict);
        CHECK(cut.size() <= base.size());
        for (const auto& p : cut)
            CHECK(8 * p.n > i64{2 * t - 1} * (2 * t - 1));
    }
}
