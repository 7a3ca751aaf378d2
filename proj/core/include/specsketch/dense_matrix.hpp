#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace specsketch {

/// Row-major dense matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }
};

Matrix identity_matrix(std::size_t n);
Matrix transpose(const Matrix& a);

/// a * b
Matrix matmul(const Matrix& a, const Matrix& b);
/// a * b^T
Matrix matmul_abt(const Matrix& a, const Matrix& b);
/// a^T * a
Matrix gram(const Matrix& a);

bool all_finite(const Matrix& a);
double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a);

/// R factor of a Householder QR (upper triangular, cols x cols, rows >= cols).
Matrix qr_r_factor(Matrix a);

/// Thin Q of a Householder QR with the R diagonal forced positive, so a
/// Gaussian input yields Haar-distributed orthonormal columns.
Matrix qr_orthonormal_columns(Matrix a);

/// Lower Cholesky factor, or nullopt if the matrix is not (numerically)
/// positive definite.
std::optional<Matrix> cholesky_lower(const Matrix& a);

}  // namespace specsketch
