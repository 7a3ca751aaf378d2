#include "specsketch/projection.hpp"

#include <cmath>

#include "specsketch/errors.hpp"
#include "specsketch/rng.hpp"
#include "specsketch/stats.hpp"

namespace specsketch {

Matrix haar_orthonormal_columns(std::size_t d, std::size_t r, std::uint64_t seed) {
    if (r == 0 || r > d)
        throw InvalidInputError("haar_orthonormal_columns: need 1 <= r <= d");
    GaussianStream stream(seed);
    Matrix g(d, r);
    for (double& v : g.data) v = stream.next();
    return qr_orthonormal_columns(std::move(g));
}

SymmetricMatrix sample_random_projection(std::size_t d, std::size_t r, std::uint64_t seed) {
    const Matrix q = haar_orthonormal_columns(d, r, seed);
    return SymmetricMatrix::from_dense(matmul_abt(q, q));
}

CornerGaussianityReport projection_corner_gaussianity(std::size_t d, std::size_t r,
                                                      std::size_t k, std::size_t trials,
                                                      std::uint64_t seed) {
    if (k == 0 || k > r)
        throw InvalidInputError("projection_corner_gaussianity: need 1 <= k <= r");
    if (trials == 0)
        throw InvalidInputError("projection_corner_gaussianity: need trials >= 1");
    const double scale = std::sqrt(static_cast<double>(d));
    std::vector<double> pooled;
    pooled.reserve(k * r * trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const Matrix frame = haar_orthonormal_columns(d, r, derive_seed(seed, t));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < r; ++j) pooled.push_back(scale * frame(i, j));
    }
    CornerGaussianityReport report;
    report.pooled_count = pooled.size();
    report.pooled_mean = mean(pooled);
    report.ks_statistic = ks_statistic_normal(std::move(pooled));
    return report;
}

}  // namespace specsketch
