#include "specsketch/wishart.hpp"

#include <cmath>

#include "specsketch/errors.hpp"
#include "specsketch/rng.hpp"

namespace specsketch {

WishartSample sample_wishart(std::size_t n, std::size_t r, std::uint64_t seed) {
    if (n == 0 || r == 0) throw InvalidInputError("sample_wishart: dimensions must be positive");
    GaussianStream stream(seed);
    Matrix g(n, r);
    for (double& v : g.data) v = stream.next();
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double* gi = g.row(i);
        for (std::size_t j = i; j < n; ++j) {
            const double* gj = g.row(j);
            double s = 0.0;
            for (std::size_t l = 0; l < r; ++l) s += gi[l] * gj[l];
            a(i, j) = s;
            a(j, i) = s;
        }
    }
    WishartSample sample;
    sample.dim = n;
    sample.dof = r;
    sample.values = SymmetricMatrix::from_dense(std::move(a));
    sample.seed = seed;
    return sample;
}

std::optional<double> try_wishart_log_density_ratio(const SymmetricMatrix& a, std::size_t dof) {
    const std::size_t n = a.dim();
    if (n > dof)
        throw InvalidInputError("wishart_log_density_ratio: need dim <= degrees of freedom");
    const auto chol = cholesky_lower(a.to_dense());
    if (!chol) return std::nullopt;
    double log_det = 0.0;
    for (std::size_t i = 0; i < n; ++i) log_det += 2.0 * std::log((*chol)(i, i));
    double log_falling = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        log_falling += std::log(static_cast<double>(dof - i));
    return log_det - log_falling;
}

double wishart_log_density_ratio(const SymmetricMatrix& a, std::size_t dof) {
    const auto ratio = try_wishart_log_density_ratio(a, dof);
    if (!ratio)
        throw InvalidInputError(
            "wishart_log_density_ratio: operand is singular or indefinite");
    return *ratio;
}

TvEstimate tv_monte_carlo(std::size_t n, std::size_t r, std::size_t samples,
                          std::uint64_t seed) {
    if (samples == 0) throw InvalidInputError("tv_monte_carlo: need samples >= 1");
    if (n > r) throw InvalidInputError("tv_monte_carlo: need n <= r");
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t t = 0; t < samples; ++t) {
        const WishartSample w = sample_wishart(n, r, derive_seed(seed, t));
        const auto ratio = try_wishart_log_density_ratio(w.values, r);
        // A singular draw has density ratio 0, contributing the full mass 1.
        const double integrand = ratio ? std::max(0.0, 1.0 - std::exp(*ratio)) : 1.0;
        sum += integrand;
        sum_sq += integrand * integrand;
    }
    const double count = static_cast<double>(samples);
    TvEstimate est;
    est.value = sum / count;
    est.samples = samples;
    if (samples > 1) {
        const double var = std::max(0.0, (sum_sq - sum * sum / count) / (count - 1.0));
        est.std_error = std::sqrt(var / count);
    }
    return est;
}

double tv_limit(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw InvalidInputError("tv_limit: alpha must lie in (0,1)");
    const double sigma2 = -2.0 * std::log1p(-alpha);
    const double sigma = std::sqrt(sigma2);
    // The integrand (1 - (1-alpha) e^x)_+ phi(x; 0, sigma^2) vanishes exactly
    // for x >= sigma^2 / 2 and the Gaussian mass below -12 sigma is far under
    // the 1e-6 target, so integrate [-12 sigma, sigma^2 / 2] with composite
    // Simpson on a grid fine enough to overshoot the accuracy goal.
    const double lo = -12.0 * sigma;
    const double hi = 0.5 * sigma2;
    const std::size_t intervals = 20000;  // even
    const double h = (hi - lo) / static_cast<double>(intervals);
    const double one_minus_alpha = 1.0 - alpha;
    const double two_pi = 6.283185307179586476925286766559;
    const auto integrand = [&](double x) {
        const double pos = 1.0 - one_minus_alpha * std::exp(x);
        if (pos <= 0.0) return 0.0;
        const double z = x / sigma;
        return pos * std::exp(-0.5 * z * z) / (sigma * std::sqrt(two_pi));
    };
    double sum = integrand(lo) + integrand(hi);
    for (std::size_t i = 1; i < intervals; ++i) {
        const double x = lo + h * static_cast<double>(i);
        sum += integrand(x) * ((i % 2 == 1) ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

}  // namespace specsketch
