#include "specsketch/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specsketch/eigensolver.hpp"
#include "specsketch/errors.hpp"
#include "specsketch/gaussian_sketch.hpp"
#include "specsketch/rng.hpp"

namespace specsketch {

std::size_t sketch_dim_for_tolerance(double epsilon, const SketchConfig& config) {
    if (!(epsilon > 0.0) || epsilon >= 1.0)
        throw InvalidInputError("sketch_dim_for_tolerance: epsilon must lie in (0,1)");
    const double k = std::ceil(config.k_constant / (epsilon * epsilon));
    if (k > static_cast<double>(config.max_sketch_dim))
        throw ResourceLimitError("sketch_dim_for_tolerance: k exceeds configured maximum");
    return static_cast<std::size_t>(k);
}

std::string to_string(EstimatorKind kind) {
    switch (kind) {
        case EstimatorKind::Corrected: return "corrected";
        case EstimatorKind::Baseline: return "baseline";
        case EstimatorKind::FastPsd: return "fastpsd";
    }
    return "corrected";
}

EstimatorKind estimator_kind_from_string(const std::string& name) {
    if (name == "corrected") return EstimatorKind::Corrected;
    if (name == "baseline") return EstimatorKind::Baseline;
    if (name == "fastpsd" || name == "fast-psd") return EstimatorKind::FastPsd;
    throw InvalidInputError("unknown estimator '" + name + "'");
}

Matrix left_multiply(const Matrix& g, const SymmetricMatrix& a) {
    if (g.cols != a.dim()) throw InvalidInputError("left_multiply: dimension mismatch");
    if (!a.is_sparse()) return matmul(g, a.dense());
    Matrix w(g.rows, a.dim());
    const auto& entries = a.entries();
    for (std::size_t i = 0; i < g.rows; ++i) {
        const double* gi = g.row(i);
        double* wi = w.row(i);
        for (const auto& e : entries) {
            wi[e.col] += e.value * gi[e.row];
            if (e.row != e.col) wi[e.row] += e.value * gi[e.col];
        }
    }
    return w;
}

namespace {

void check_sketch_request(const SymmetricMatrix& a, std::size_t k, const SketchConfig& config) {
    if (a.dim() == 0) throw InvalidInputError("estimate_spectrum: empty matrix");
    if (k == 0) throw InvalidInputError("estimate_spectrum: k must be positive");
    if (k > config.max_sketch_dim)
        throw ResourceLimitError("estimate_spectrum: k exceeds configured maximum");
}

}  // namespace

SpectrumEstimateResult estimate_spectrum_with_outcome(const SymmetricMatrix& a, std::size_t k,
                                                      std::uint64_t seed,
                                                      const SketchConfig& config) {
    check_sketch_request(a, k, config);
    const std::size_t d = a.dim();

    const GaussianSketchMatrix g = sample_gaussian_sketch(k, d, seed);
    const Matrix w = left_multiply(g.entries, a);
    // Floating-point G A G^T is symmetric only to rounding; symmetrize before
    // handing it to the eigensolver.
    SymmetricMatrix sketch = SymmetricMatrix::from_dense(matmul_abt(w, g.entries));

    SketchOutcome outcome;
    outcome.sketch_trace = sketch.trace();
    outcome.raw_eigenvalues = sym_eigenvalues(sketch);
    outcome.sketch = std::move(sketch);
    outcome.seed = seed;
    outcome.sketch_dim = k;

    const double shift = outcome.sketch_trace / static_cast<double>(k);
    const auto& raw = outcome.raw_eigenvalues.values;

    std::vector<double> values;
    values.reserve(d);
    if (k <= d) {
        for (double lambda : raw) values.push_back(lambda - shift);
        values.resize(d, 0.0);
    } else {
        // Keep the d sketch eigenvalues of largest magnitude; the other k-d
        // are the exact zeros a rank-<=d sketch always carries.
        std::vector<std::size_t> order(k);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return std::abs(raw[x]) > std::abs(raw[y]);
        });
        for (std::size_t i = 0; i < d; ++i) values.push_back(raw[order[i]] - shift);
    }

    SpectrumEstimate est;
    est.values = Spectrum::sorted(std::move(values)).values;
    est.sketch_dim = k;
    est.seed = seed;
    est.kind = EstimatorKind::Corrected;
    return {std::move(est), std::move(outcome)};
}

SpectrumEstimate estimate_spectrum(const SymmetricMatrix& a, std::size_t k, std::uint64_t seed,
                                   const SketchConfig& config) {
    return estimate_spectrum_with_outcome(a, k, seed, config).estimate;
}

SpectrumEstimate negation_conjugate(SpectrumEstimate est) {
    std::reverse(est.values.begin(), est.values.end());
    for (double& v : est.values) v = -v;
    return est;
}

SpectrumEstimate estimate_spectrum_baseline(const SymmetricMatrix& a, std::size_t k,
                                            std::uint64_t seed, const SketchConfig& config) {
    check_sketch_request(a, k, config);
    const std::size_t d = a.dim();
    const GaussianSketchMatrix g = sample_gaussian_sketch(k, d, derive_seed(seed, 0));
    const GaussianSketchMatrix h = sample_gaussian_sketch(k, d, derive_seed(seed, 1));

    const Matrix p = left_multiply(g.entries, a);  // G A, k x d
    std::vector<double> sv;
    if (d < k) {
        // sigma(G A H^T) = sigma(R2) where G A = Q1 R1 and H R1^T = Q2 R2;
        // two d x d factors instead of a k x k Jacobi.
        const Matrix r1 = qr_r_factor(p);
        const Matrix r2 = qr_r_factor(matmul_abt(h.entries, r1));
        sv = singular_values(r2);
    } else {
        sv = singular_values(matmul_abt(p, h.entries));
    }

    sv.resize(d, 0.0);
    SpectrumEstimate est;
    est.values = Spectrum::sorted(std::move(sv)).values;
    est.sketch_dim = k;
    est.seed = seed;
    est.kind = EstimatorKind::Baseline;
    return est;
}

BiasProbeResult bias_probe(const SymmetricMatrix& a, std::size_t k, std::uint64_t seed,
                           const SketchConfig& config) {
    const auto result = estimate_spectrum_with_outcome(a, k, seed, config);
    BiasProbeResult probe;
    probe.raw_top = result.outcome.raw_eigenvalues.values.front();
    probe.corrected_top = result.estimate.values.front();
    probe.predicted_bias = a.trace() / static_cast<double>(k);
    return probe;
}

ConcentrationReport singular_value_concentration(const Matrix& b, std::size_t k,
                                                 std::size_t top_count, std::size_t trials,
                                                 std::uint64_t seed) {
    if (!all_finite(b)) throw InvalidInputError("singular_value_concentration: non-finite input");
    if (trials == 0) throw InvalidInputError("singular_value_concentration: need trials >= 1");
    const double norm = frobenius_norm(b);
    if (std::abs(norm - 1.0) > 1e-6)
        throw InvalidInputError("singular_value_concentration: ||B||_F must equal 1");
    const std::size_t max_rank = std::min(b.rows, b.cols);
    if (top_count == 0 || top_count > std::min(k, max_rank))
        throw InvalidInputError("singular_value_concentration: invalid top_count");

    const std::vector<double> base = singular_values(b);
    ConcentrationReport report;
    report.per_trial_max.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const GaussianSketchMatrix g =
            sample_gaussian_sketch(k, b.rows, derive_seed(seed, t));
        const std::vector<double> sv = singular_values(matmul(g.entries, b));
        double dev = 0.0;
        for (std::size_t j = 0; j < top_count; ++j)
            dev = std::max(dev, std::abs(sv[j] * sv[j] - base[j] * base[j]));
        report.per_trial_max.push_back(dev);
        report.max_abs_dev = std::max(report.max_abs_dev, dev);
    }
    return report;
}

}  // namespace specsketch
