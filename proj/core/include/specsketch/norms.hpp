#pragma once

#include "specsketch/symmetric_matrix.hpp"

namespace specsketch {

double frobenius_norm(const SymmetricMatrix& a);

/// Largest eigenvalue magnitude.
double operator_norm(const SymmetricMatrix& a);

double trace(const SymmetricMatrix& a);

}  // namespace specsketch
