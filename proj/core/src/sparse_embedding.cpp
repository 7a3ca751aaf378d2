#include "specsketch/sparse_embedding.hpp"

#include <cmath>
#include <cstring>

#include "specsketch/errors.hpp"
#include "specsketch/rng.hpp"

namespace specsketch {

SparseEmbeddingMatrix sample_sparse_embedding(std::size_t m, std::size_t d, std::size_t s,
                                              std::uint64_t seed) {
    if (m == 0 || d == 0 || s == 0)
        throw InvalidInputError("sample_sparse_embedding: dimensions must be positive");
    if (s > m) throw InvalidInputError("sample_sparse_embedding: need s <= m");
    SparseEmbeddingMatrix e;
    e.rows = m;
    e.cols = d;
    e.nnz_per_col = s;
    e.seed = seed;
    e.positions.resize(d * s);
    e.values.resize(d * s);
    GaussianStream stream(seed);
    const double mag = 1.0 / std::sqrt(static_cast<double>(s));
    std::vector<std::uint32_t> picked(s);
    for (std::size_t j = 0; j < d; ++j) {
        // s distinct rows by rejection; s is tiny relative to m in practice.
        for (std::size_t t = 0; t < s; ++t) {
            std::uint32_t r;
            bool fresh;
            do {
                r = static_cast<std::uint32_t>(stream.next_below(m));
                fresh = true;
                for (std::size_t u = 0; u < t; ++u)
                    if (picked[u] == r) fresh = false;
            } while (!fresh);
            picked[t] = r;
            e.positions[j * s + t] = r;
            e.values[j * s + t] = stream.next_sign() * mag;
        }
    }
    return e;
}

Matrix apply_sparse_embedding(const SparseEmbeddingMatrix& e, const SymmetricMatrix& a,
                              EmbeddingSide side) {
    Matrix out = side == EmbeddingSide::Left ? Matrix(e.rows, a.dim()) : Matrix(a.dim(), e.rows);
    apply_sparse_embedding(e, a, side, out);
    return out;
}

void apply_sparse_embedding(const SparseEmbeddingMatrix& e, const SymmetricMatrix& a,
                            EmbeddingSide side, Matrix& out) {
    if (e.cols != a.dim())
        throw InvalidInputError("apply_sparse_embedding: dimension mismatch");
    const std::size_t expected_rows = side == EmbeddingSide::Left ? e.rows : a.dim();
    const std::size_t expected_cols = side == EmbeddingSide::Left ? a.dim() : e.rows;
    if (out.rows != expected_rows || out.cols != expected_cols)
        throw InvalidInputError("apply_sparse_embedding: output shape mismatch");
    const std::size_t s = e.nnz_per_col;
    const auto add_term = [&](Matrix& out, std::size_t row_of_a, std::size_t col_of_a,
                              double v) {
        // Accumulates v * E[:, row] into column col (Left) or v * E[:, row]^T
        // into row col (Right).
        for (std::size_t t = 0; t < s; ++t) {
            const std::size_t p = e.positions[row_of_a * s + t];
            const double w = v * e.values[row_of_a * s + t];
            if (side == EmbeddingSide::Left)
                out(p, col_of_a) += w;
            else
                out(col_of_a, p) += w;
        }
    };
    if (a.is_sparse()) {
        for (const auto& en : a.entries()) {
            add_term(out, en.row, en.col, en.value);
            if (en.row != en.col) add_term(out, en.col, en.row, en.value);
        }
    } else {
        const Matrix& m = a.dense();
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j)
                if (m(i, j) != 0.0) add_term(out, i, j, m(i, j));
    }
}

Matrix apply_sparse_embedding_right(const Matrix& b, const SparseEmbeddingMatrix& e) {
    if (b.cols != e.cols)
        throw InvalidInputError("apply_sparse_embedding_right: dimension mismatch");
    const std::size_t s = e.nnz_per_col;
    Matrix out(b.rows, e.rows);
    for (std::size_t i = 0; i < b.rows; ++i) {
        const double* bi = b.row(i);
        double* oi = out.row(i);
        for (std::size_t j = 0; j < b.cols; ++j) {
            const double v = bi[j];
            if (v == 0.0) continue;
            for (std::size_t t = 0; t < s; ++t)
                oi[e.positions[j * s + t]] += v * e.values[j * s + t];
        }
    }
    return out;
}

void apply_sparse_embedding_vector(const SparseEmbeddingMatrix& e, const double* x, double* y) {
    std::memset(y, 0, e.rows * sizeof(double));
    const std::size_t s = e.nnz_per_col;
    for (std::size_t j = 0; j < e.cols; ++j) {
        const double v = x[j];
        if (v == 0.0) continue;
        for (std::size_t t = 0; t < s; ++t) y[e.positions[j * s + t]] += v * e.values[j * s + t];
    }
}

Matrix sparse_embedding_to_dense(const SparseEmbeddingMatrix& e) {
    Matrix m(e.rows, e.cols);
    for (std::size_t j = 0; j < e.cols; ++j)
        for (std::size_t t = 0; t < e.nnz_per_col; ++t)
            m(e.positions[j * e.nnz_per_col + t], j) += e.values[j * e.nnz_per_col + t];
    return m;
}

}  // namespace specsketch
