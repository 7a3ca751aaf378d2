#include "specsketch/norms.hpp"

#include <cmath>

#include "specsketch/eigensolver.hpp"

namespace specsketch {

double frobenius_norm(const SymmetricMatrix& a) { return a.frobenius_norm(); }

double operator_norm(const SymmetricMatrix& a) {
    const Spectrum s = sym_eigenvalues(a);
    if (s.size() == 0) return 0.0;
    return std::max(std::abs(s.values.front()), std::abs(s.values.back()));
}

double trace(const SymmetricMatrix& a) { return a.trace(); }

}  // namespace specsketch
