#include <doctest.h>

#include <cmath>

#include "specsketch/distinguisher.hpp"
#include "specsketch/errors.hpp"
#include "specsketch/rng.hpp"
#include "specsketch/wishart.hpp"

using namespace specsketch;

TEST_SUITE_BEGIN("query-lowerbound");

TEST_CASE("lr distinguisher threshold sides") {
    // log det(c I_k) = k log c dominates the falling factorial for huge c.
    const std::size_t r = 10;
    CHECK(lr_distinguisher(SymmetricMatrix::identity(3).scaled(1e6), r) ==
          WishartRankDecision::RankPlusTwo);
    CHECK(lr_distinguisher(SymmetricMatrix::identity(3).scaled(1e-6), r) ==
          WishartRankDecision::BaseRank);
}

TEST_CASE("singular corner decides the base rank") {
    const SymmetricMatrix singular = SymmetricMatrix::diagonal({4.0, 0.0});
    CHECK(lr_distinguisher(singular, 9) == WishartRankDecision::BaseRank);
}

TEST_CASE("lr advantage equals the tv distance at full budget") {
    // Bayes advantage of the likelihood-ratio test at equal priors is exactly
    // the total variation distance; check the Monte-Carlo identity at k = r.
    const std::size_t k = 20, r = 20;
    const auto curve = advantage_curve(r, {k}, 2000, 15);
    REQUIRE(curve.size() == 1);
    const TvEstimate tv = tv_monte_carlo(k, r, 20000, 16);
    CHECK(std::abs(curve[0].advantage - tv.value) <= 0.05);
}

TEST_CASE("advantage stays below tv plus noise at partial budget") {
    const std::size_t r = 60;
    const auto curve = advantage_curve(r, {6}, 2000, 8);
    const TvEstimate tv = tv_monte_carlo(6, r, 20000, 9);
    const double mc_noise = 2.0 / std::sqrt(2000.0);
    CHECK(curve[0].advantage <= tv.value + 3.0 * (tv.std_error + mc_noise));
}

TEST_CASE("single chi-square queries are nearly useless at r = 300") {
    const auto curve = advantage_curve(300, {1}, 2000, 23);
    // True advantage is TV(chi2_300, chi2_302) ~ 0.03; frozen with room for
    // the Monte-Carlo noise of 2000 trials at this fixed seed.
    CHECK(curve[0].advantage <= 0.08);
}

TEST_CASE("advantage grows with the query budget") {
    const auto curve = advantage_curve(120, {12, 120}, 1500, 31);
    CHECK(curve[1].advantage >= curve[0].advantage + 0.1);
}

TEST_CASE("advantage curve validates inputs") {
    CHECK_THROWS_AS(advantage_curve(10, {11}, 100, 0), InvalidInputError);
    CHECK_THROWS_AS(advantage_curve(10, {0}, 100, 0), InvalidInputError);
    CHECK_THROWS_AS(advantage_curve(10, {5}, 0, 0), InvalidInputError);
}

TEST_CASE("the leading corner of a wishart sample is itself wishart") {
    // Two checks against direct W(k, r) sampling: the empirical mean matrix
    // (E[W] = r I) and the acceptance rate of the likelihood-ratio rule as a
    // distributional proxy.
    const std::size_t n = 12, k = 5, r = 16, trials = 2000;
    Matrix mean_corner(k, k);
    std::size_t corner_plus = 0, direct_plus = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto big = sample_wishart(n, r, derive_seed(70, t)).values;
        Matrix corner(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) corner(i, j) = big.at(i, j);
        for (std::size_t i = 0; i < k * k; ++i) mean_corner.data[i] += corner.data[i];
        const auto corner_sym = SymmetricMatrix::from_dense(corner);
        if (lr_distinguisher(corner_sym, r) == WishartRankDecision::RankPlusTwo) ++corner_plus;
        const auto direct = sample_wishart(k, r, derive_seed(71, t)).values;
        if (lr_distinguisher(direct, r) == WishartRankDecision::RankPlusTwo) ++direct_plus;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const double expected = i == j ? static_cast<double>(r) : 0.0;
            const double sd = std::sqrt((i == j ? 2.0 : 1.0) * r / static_cast<double>(trials));
            CHECK(std::abs(mean_corner(i, j) / trials - expected) <= 4.0 * sd);
        }
    const double rate_gap =
        std::abs(static_cast<double>(corner_plus) - static_cast<double>(direct_plus)) / trials;
    CHECK(rate_gap <= 0.05);
}

TEST_CASE("power iteration tester cannot beat the lr tester") {
    const std::size_t r = 60, budget = 6;
    const auto adaptive = power_iteration_advantage(2 * r, r, budget, 600, 40);
    const auto lr = advantage_curve(r, {budget}, 2000, 41);
    const double mc_noise = 2.0 / std::sqrt(600.0);
    CHECK(adaptive.advantage <= lr[0].advantage + 3.0 * mc_noise + 0.05);
}

TEST_SUITE_END();
