#include <doctest.h>

#include <cmath>

#include "specsketch/eigensolver.hpp"
#include "specsketch/errors.hpp"
#include "specsketch/projection.hpp"

using namespace specsketch;

TEST_SUITE_BEGIN("query-lowerbound");

TEST_CASE("projection with r = d is the identity") {
    const SymmetricMatrix p = sample_random_projection(8, 8, 5);
    CHECK(max_abs_diff(p.to_dense(), identity_matrix(8)) <= 1e-10);
}

TEST_CASE("projection is idempotent with trace r") {
    const SymmetricMatrix p = sample_random_projection(64, 10, 17);
    const Matrix pd = p.to_dense();
    CHECK(max_abs_diff(matmul(pd, pd), pd) <= 1e-8);
    CHECK(p.trace() == doctest::Approx(10.0).epsilon(1e-6));
    CHECK_THROWS_AS(sample_random_projection(4, 5, 0), InvalidInputError);
}

TEST_CASE("projection spectrum is exactly r ones and d - r zeros") {
    const SymmetricMatrix p = sample_random_projection(32, 7, 3);
    const Spectrum s = sym_eigenvalues(p);
    for (std::size_t i = 0; i < 7; ++i) CHECK(std::abs(s[i] - 1.0) <= 1e-6);
    for (std::size_t i = 7; i < 32; ++i) CHECK(std::abs(s[i]) <= 1e-6);
}

TEST_CASE("corner entries look Gaussian when d >> r^2") {
    // d = 10^4, r = 20, k = 10, 50 trials pools 10^4 entries; the KS statistic
    // must sit within 1.5x the 99% null quantile 1.628 / sqrt(count).
    const auto report = projection_corner_gaussianity(10000, 20, 10, 50, 12);
    CHECK(report.pooled_count == 10000);
    CHECK(report.ks_statistic <= 1.5 * 1.628 / std::sqrt(1e4));
    CHECK(std::abs(report.pooled_mean) <= 4.0 / std::sqrt(1e4));
}

TEST_CASE("corner entries are visibly non-Gaussian at d = r") {
    // Negative control: the d >> r^2 requirement fails badly at d = r = 2,
    // where a scaled Haar column follows the arcsine law (pilot KS ~ 0.09).
    const auto report = projection_corner_gaussianity(2, 2, 2, 1000, 4);
    CHECK(report.ks_statistic > 0.05);
}

TEST_SUITE_END();
