#pragma once

#include <cstdint>
#include <optional>

#include "specsketch/symmetric_matrix.hpp"

namespace specsketch {

/// G G^T for an n x r matrix of i.i.d. standard normals; PSD of rank
/// min(n, r) almost surely.
struct WishartSample {
    std::size_t dim = 0;  // n
    std::size_t dof = 0;  // r
    SymmetricMatrix values;
    std::uint64_t seed = 0;
};

WishartSample sample_wishart(std::size_t n, std::size_t r, std::uint64_t seed);

/// log f_{n,r+2}(A) - log f_{n,r}(A) = log det A - sum_{i=0}^{n-1} log(r - i),
/// computed through the Cholesky factor.  Requires n <= r and A positive
/// definite; nullopt when the Cholesky factorization fails (density ratio 0).
std::optional<double> try_wishart_log_density_ratio(const SymmetricMatrix& a, std::size_t dof);

/// Throwing variant of the above (InvalidInputError on a singular operand).
double wishart_log_density_ratio(const SymmetricMatrix& a, std::size_t dof);

struct TvEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

/// Monte-Carlo total variation distance between W(n, r) and W(n, r+2):
/// mean of (1 - exp(log density ratio))_+ over samples of W(n, r).
TvEstimate tv_monte_carlo(std::size_t n, std::size_t r, std::size_t samples,
                          std::uint64_t seed);

/// Limit of that distance as r grows with n/r -> alpha: the expectation of
/// (1 - (1-alpha) e^x)_+ under x ~ N(0, -2 log(1-alpha)), by quadrature to
/// 1e-6 absolute error.
double tv_limit(double alpha);

}  // namespace specsketch
