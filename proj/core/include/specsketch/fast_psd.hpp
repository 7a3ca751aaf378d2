#pragma once

#include <cstdint>

#include "specsketch/sketch.hpp"
#include "specsketch/symmetric_matrix.hpp"

namespace specsketch {

/// Parameters of the nnz-time pipeline for sparse PSD operands: two m x d
/// sparse embeddings compress A to M = S A T^T, the 2m x 2m block matrix
/// [[0, M], [M^T, 0]] carries the singular values of M as +/- eigenvalue
/// pairs, and the dense Gaussian sketch with k rows estimates those.
struct FastSketchConfig {
    std::size_t outer_dim = 0;     // m, rows of S and T
    std::size_t nnz_per_col = 4;   // s
    std::size_t inner_dim = 0;     // k, rows of the dense Gaussian sketch
    std::uint64_t seed = 0;
};

/// Default outer dimension, ceil(outer_constant / epsilon^2).
std::size_t outer_dim_for_tolerance(double epsilon, double outer_constant = 16.0);

struct FastPsdOutcome {
    SpectrumEstimate estimate;   // nonnegative, sorted, length d
    bool dense_fallback = false; // outer_dim exceeded d, plain dense sketch used
};

/// Spectrum estimate for a sparse PSD matrix in O(s nnz(A) m + poly(m)) work.
/// Negative inner estimates are clamped to zero.  A non-PSD input voids the
/// guarantee but the computation proceeds (debug builds warn on small inputs).
FastPsdOutcome fast_psd_spectrum(const SymmetricMatrix& a, const FastSketchConfig& config);

/// [[0, M], [M^T, 0]] of a rectangular M.
Matrix symmetrized_block(const Matrix& m);

}  // namespace specsketch
