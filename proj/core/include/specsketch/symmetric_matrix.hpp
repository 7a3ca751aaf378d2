#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "specsketch/dense_matrix.hpp"

namespace specsketch {

/// One stored entry of a sparse symmetric matrix; row <= col (upper triangle).
struct SparseEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    double value = 0.0;
};

/// A d x d real symmetric matrix, stored either dense (full, mirrored) or as
/// upper-triangle coordinate triples mirrored on read.  Immutable after
/// construction.
class SymmetricMatrix {
public:
    /// Empty (moved-from) state; every factory returns dim >= 1.
    SymmetricMatrix() = default;

    /// Dense constructor.  Inputs symmetric only up to floating-point noise
    /// are silently symmetrized via (M + M^T)/2; asymmetry beyond
    /// sym_tol * ||M||_F is rejected.
    static SymmetricMatrix from_dense(Matrix m, double sym_tol = 1e-8);

    /// Sparse constructor from coordinate triples.  Entries may be given in
    /// either triangle (or both, consistently); one upper triangle is stored.
    static SymmetricMatrix from_sparse(std::size_t dim, std::vector<SparseEntry> entries);

    static SymmetricMatrix zero(std::size_t dim) { return from_dense(Matrix(dim, dim)); }
    static SymmetricMatrix identity(std::size_t dim);
    static SymmetricMatrix diagonal(const std::vector<double>& values);

    std::size_t dim() const { return dim_; }
    bool is_sparse() const { return sparse_; }

    /// Dense element access; mirrors the stored triangle for sparse storage
    /// (O(nnz) per call — use entries()/dense() in hot paths).
    double at(std::size_t i, std::size_t j) const;

    const Matrix& dense() const;                      // valid when !is_sparse()
    const std::vector<SparseEntry>& entries() const;  // valid when is_sparse()

    Matrix to_dense() const;

    /// Stored entry count: d*d for dense, mirrored off-diagonal count for sparse.
    std::size_t nnz() const;

    double trace() const;
    double frobenius_norm() const;

    /// y = A x
    void apply(const double* x, double* y) const;

    SymmetricMatrix scaled(double factor) const;
    SymmetricMatrix negated() const { return scaled(-1.0); }

private:
    std::size_t dim_ = 0;
    bool sparse_ = false;
    Matrix dense_;
    std::vector<SparseEntry> entries_;
};

}  // namespace specsketch
