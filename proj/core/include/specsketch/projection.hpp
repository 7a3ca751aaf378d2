#pragma once

#include <cstdint>

#include "specsketch/dense_matrix.hpp"
#include "specsketch/symmetric_matrix.hpp"

namespace specsketch {

/// d x r matrix with Haar-distributed orthonormal columns (QR of a Gaussian
/// matrix with the R diagonal forced positive).
Matrix haar_orthonormal_columns(std::size_t d, std::size_t r, std::uint64_t seed);

/// Orthogonal projection onto a uniformly random r-dimensional subspace of
/// R^d: Q Q^T for Haar orthonormal Q.  Idempotent with trace r.
SymmetricMatrix sample_random_projection(std::size_t d, std::size_t r, std::uint64_t seed);

struct CornerGaussianityReport {
    double ks_statistic = 0.0;  // pooled entries of sqrt(d) * corner vs N(0,1)
    double pooled_mean = 0.0;
    std::size_t pooled_count = 0;
};

/// Pools the k x r leading corner of Haar orthonormal frames, scaled by
/// sqrt(d), across trials; near-Gaussian when d >> r^2 and visibly not
/// otherwise.
CornerGaussianityReport projection_corner_gaussianity(std::size_t d, std::size_t r,
                                                      std::size_t k, std::size_t trials,
                                                      std::uint64_t seed);

}  // namespace specsketch
