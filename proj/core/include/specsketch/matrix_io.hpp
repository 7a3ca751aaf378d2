#pragma once

#include <iosfwd>
#include <string>

#include "specsketch/symmetric_matrix.hpp"

namespace specsketch {

/// Dense format: one row per line, whitespace-separated values.  The matrix
/// must be square and symmetric (to the usual floating-point tolerance).
SymmetricMatrix read_dense_matrix(std::istream& in);
SymmetricMatrix read_dense_matrix_file(const std::string& path);

/// MatrixMarket coordinate format, real symmetric (a `general` qualifier is
/// accepted when the stored entries are pairwise symmetric).  1-based indices.
SymmetricMatrix read_matrix_market(std::istream& in);
SymmetricMatrix read_matrix_market_file(const std::string& path);

void write_dense_matrix(std::ostream& out, const SymmetricMatrix& a);
void write_matrix_market(std::ostream& out, const SymmetricMatrix& a);

}  // namespace specsketch
