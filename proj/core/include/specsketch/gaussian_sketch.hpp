#pragma once

#include <cstdint>

#include "specsketch/dense_matrix.hpp"

namespace specsketch {

/// A k x d matrix of i.i.d. N(0, 1/k) entries, regenerable from its seed.
struct GaussianSketchMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::uint64_t seed = 0;
    Matrix entries;
};

/// Entries are drawn row-major from a GaussianStream(seed), so the same seed
/// reproduces the matrix bit for bit on the same build.
GaussianSketchMatrix sample_gaussian_sketch(std::size_t k, std::size_t d, std::uint64_t seed);

}  // namespace specsketch
