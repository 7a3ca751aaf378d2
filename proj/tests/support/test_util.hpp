#pragma once

#include <cstdint>

#include "specsketch/dense_matrix.hpp"
#include "specsketch/rng.hpp"
#include "specsketch/symmetric_matrix.hpp"

namespace specsketch::testing {

inline Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    GaussianStream stream(seed);
    Matrix m(rows, cols);
    for (double& v : m.data) v = stream.next();
    return m;
}

inline SymmetricMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
    Matrix m = random_matrix(n, n, seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (m(i, j) + m(j, i));
            m(i, j) = v;
            m(j, i) = v;
        }
    return SymmetricMatrix::from_dense(std::move(m));
}

}  // namespace specsketch::testing
