#pragma once

#include "specsketch/dense_matrix.hpp"
#include "specsketch/spectrum.hpp"
#include "specsketch/symmetric_matrix.hpp"

namespace specsketch {

struct EigenDecomposition {
    Spectrum eigenvalues;  // non-increasing
    Matrix eigenvectors;   // column i pairs with eigenvalues[i]
};

/// Full symmetric eigendecomposition, A = Q diag(lambda) Q^T.
///
/// Householder tridiagonalization followed by implicit-shift QL iteration.
/// Throws InvalidInputError on non-finite input and ConvergenceError if any
/// eigenvalue fails to settle within the iteration budget.
EigenDecomposition sym_eig(const SymmetricMatrix& a);

/// Eigenvalues only; skips accumulating the orthogonal factor.
Spectrum sym_eigenvalues(const SymmetricMatrix& a);

/// Singular values of a general rectangular matrix, sorted non-increasing,
/// length min(rows, cols).  One-sided Jacobi with a QR pre-reduction for
/// strongly rectangular inputs.
std::vector<double> singular_values(const Matrix& b);

}  // namespace specsketch
