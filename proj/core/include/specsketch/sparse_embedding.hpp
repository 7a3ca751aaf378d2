#pragma once

#include <cstdint>
#include <vector>

#include "specsketch/dense_matrix.hpp"
#include "specsketch/symmetric_matrix.hpp"

namespace specsketch {

/// OSNAP-style sparse embedding: m x d with exactly s nonzeros per column,
/// each of magnitude 1/sqrt(s) with a random sign, at distinct random rows.
struct SparseEmbeddingMatrix {
    std::size_t rows = 0;         // m
    std::size_t cols = 0;         // d
    std::size_t nnz_per_col = 0;  // s
    std::uint64_t seed = 0;
    // Column j occupies positions[j*s .. j*s+s-1] with matching signed values.
    std::vector<std::uint32_t> positions;
    std::vector<double> values;
};

SparseEmbeddingMatrix sample_sparse_embedding(std::size_t m, std::size_t d, std::size_t s,
                                              std::uint64_t seed);

enum class EmbeddingSide { Left, Right };

/// E * A (Left, m x d) or A * E^T (Right, d x m) against a sparse symmetric
/// operand, in O(s * nnz(A)) multiply-adds.
Matrix apply_sparse_embedding(const SparseEmbeddingMatrix& e, const SymmetricMatrix& a,
                              EmbeddingSide side);

/// Accumulating variant: adds into a caller-provided (typically zeroed)
/// output of the right shape, so repeated applications reuse storage.
void apply_sparse_embedding(const SparseEmbeddingMatrix& e, const SymmetricMatrix& a,
                            EmbeddingSide side, Matrix& out);

/// B * E^T for a dense B with d columns; costs O(s * rows(B) * d).
Matrix apply_sparse_embedding_right(const Matrix& b, const SparseEmbeddingMatrix& e);

/// y = E x
void apply_sparse_embedding_vector(const SparseEmbeddingMatrix& e, const double* x, double* y);

/// Dense copy, for small-instance cross-checks.
Matrix sparse_embedding_to_dense(const SparseEmbeddingMatrix& e);

}  // namespace specsketch
