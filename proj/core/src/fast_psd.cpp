#include "specsketch/fast_psd.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "specsketch/eigensolver.hpp"
#include "specsketch/errors.hpp"
#include "specsketch/rng.hpp"
#include "specsketch/sparse_embedding.hpp"

namespace specsketch {

std::size_t outer_dim_for_tolerance(double epsilon, double outer_constant) {
    if (!(epsilon > 0.0) || epsilon >= 1.0)
        throw InvalidInputError("outer_dim_for_tolerance: epsilon must lie in (0,1)");
    return static_cast<std::size_t>(std::ceil(outer_constant / (epsilon * epsilon)));
}

Matrix symmetrized_block(const Matrix& m) {
    const std::size_t r = m.rows, c = m.cols;
    Matrix out(r + c, r + c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            out(i, r + j) = m(i, j);
            out(r + j, i) = m(i, j);
        }
    return out;
}

namespace {

void validate(const FastSketchConfig& config) {
    if (config.outer_dim == 0 || config.inner_dim == 0 || config.nnz_per_col == 0)
        throw InvalidInputError("fast_psd_spectrum: config dimensions must be positive");
    if (config.outer_dim < config.inner_dim)
        throw InvalidInputError("fast_psd_spectrum: need outer_dim >= inner_dim");
}

#ifndef NDEBUG
void debug_psd_check(const SymmetricMatrix& a) {
    if (a.dim() > 512) return;  // full eigendecomposition; keep it to small inputs
    const Spectrum s = sym_eigenvalues(a);
    if (s.values.back() < -1e-6 * a.frobenius_norm())
        std::cerr << "fast_psd_spectrum: warning: operand is not PSD "
                  << "(lambda_min = " << s.values.back() << "); estimates are unreliable\n";
}
#endif

}  // namespace

FastPsdOutcome fast_psd_spectrum(const SymmetricMatrix& a, const FastSketchConfig& config) {
    validate(config);
    const std::size_t d = a.dim();
    const std::size_t m = config.outer_dim;
#ifndef NDEBUG
    debug_psd_check(a);
#endif

    if (m > d) {
        // The outer compression would enlarge the operand; sketch it directly.
        SpectrumEstimate est = estimate_spectrum(a, config.inner_dim, config.seed);
        for (double& v : est.values) v = std::max(v, 0.0);
        est.values = Spectrum::sorted(std::move(est.values)).values;
        est.kind = EstimatorKind::FastPsd;
        return {std::move(est), true};
    }

    const SparseEmbeddingMatrix s_embed =
        sample_sparse_embedding(m, d, config.nnz_per_col, derive_seed(config.seed, 0));
    const SparseEmbeddingMatrix t_embed =
        sample_sparse_embedding(m, d, config.nnz_per_col, derive_seed(config.seed, 1));

    const Matrix sa = apply_sparse_embedding(s_embed, a, EmbeddingSide::Left);  // m x d
    const Matrix compressed = apply_sparse_embedding_right(sa, t_embed);        // m x m

    const SymmetricMatrix block =
        SymmetricMatrix::from_dense(symmetrized_block(compressed));
    const SpectrumEstimate inner =
        estimate_spectrum(block, config.inner_dim, derive_seed(config.seed, 2));

    // Eigenvalues of the block matrix come in +/- sigma pairs; the top half
    // estimates the singular values of the compressed operand, which in turn
    // track the eigenvalues of the PSD input.  Noise can push small ones
    // negative, so clamp.
    std::vector<double> values(inner.values.begin(),
                               inner.values.begin() + static_cast<std::ptrdiff_t>(m));
    for (double& v : values) v = std::max(v, 0.0);
    values.resize(d, 0.0);

    SpectrumEstimate est;
    est.values = Spectrum::sorted(std::move(values)).values;
    est.sketch_dim = config.inner_dim;
    est.seed = config.seed;
    est.kind = EstimatorKind::FastPsd;
    return {std::move(est), false};
}

}  // namespace specsketch
