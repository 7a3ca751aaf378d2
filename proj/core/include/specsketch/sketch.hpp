#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specsketch/dense_matrix.hpp"
#include "specsketch/spectrum.hpp"
#include "specsketch/symmetric_matrix.hpp"

namespace specsketch {

struct SketchConfig {
    /// Sketch rows chosen as ceil(k_constant / epsilon^2).
    double k_constant = 4.0;
    /// Hard cap on the sketch dimension.
    std::size_t max_sketch_dim = 1u << 16;
};

std::size_t sketch_dim_for_tolerance(double epsilon, const SketchConfig& config = {});

enum class EstimatorKind { Corrected, Baseline, FastPsd };

std::string to_string(EstimatorKind kind);
EstimatorKind estimator_kind_from_string(const std::string& name);

/// The compressed view S = G A G^T together with its raw spectrum.
struct SketchOutcome {
    SymmetricMatrix sketch;    // k x k
    double sketch_trace = 0.0;
    Spectrum raw_eigenvalues;  // length k
    std::uint64_t seed = 0;
    std::size_t sketch_dim = 0;
};

/// Length-d signed eigenvalue estimates, sorted non-increasing.
struct SpectrumEstimate {
    std::vector<double> values;
    std::size_t sketch_dim = 0;
    std::uint64_t seed = 0;
    EstimatorKind kind = EstimatorKind::Corrected;
};

struct SpectrumEstimateResult {
    SpectrumEstimate estimate;
    SketchOutcome outcome;
};

/// Estimates all d signed eigenvalues of A from the single sketch G A G^T:
/// the top-k sketch eigenvalues shifted by -trace(S)/k, zero-filled to length
/// d, sorted non-increasing.  When k exceeds d, the k-d smallest-magnitude
/// sketch eigenvalues (the exact rank-deficiency zeros of S) are discarded
/// before the shift instead of zero-filling.
SpectrumEstimateResult estimate_spectrum_with_outcome(const SymmetricMatrix& a, std::size_t k,
                                                      std::uint64_t seed,
                                                      const SketchConfig& config = {});

SpectrumEstimate estimate_spectrum(const SymmetricMatrix& a, std::size_t k, std::uint64_t seed,
                                   const SketchConfig& config = {});

/// Reverses and negates the estimate sequence; encodes eig(-S) = -reverse(eig(S)).
SpectrumEstimate negation_conjugate(SpectrumEstimate est);

/// Sign-blind baseline: singular values of G A H^T for independent Gaussian
/// G, H (sub-seeds 0 and 1 of `seed`), zero-padded to length d.  Nonnegative
/// by construction, so it cannot distinguish A from -A.
SpectrumEstimate estimate_spectrum_baseline(const SymmetricMatrix& a, std::size_t k,
                                            std::uint64_t seed,
                                            const SketchConfig& config = {});

struct BiasProbeResult {
    double raw_top = 0.0;        // lambda_1(G A G^T), no correction
    double corrected_top = 0.0;  // first corrected estimate
    double predicted_bias = 0.0; // trace(A) / k
};

/// Shows the raw sketch spectrum crowding around trace(A)/k and the shift
/// removing it.
BiasProbeResult bias_probe(const SymmetricMatrix& a, std::size_t k, std::uint64_t seed,
                           const SketchConfig& config = {});

struct ConcentrationReport {
    double max_abs_dev = 0.0;            // over trials and indices 1..top_count
    std::vector<double> per_trial_max;   // one entry per trial
};

/// Deviation |sigma_j(GB)^2 - sigma_j(B)^2| for j = 1..top_count over
/// independent sketches of a unit-Frobenius B.
ConcentrationReport singular_value_concentration(const Matrix& b, std::size_t k,
                                                 std::size_t top_count, std::size_t trials,
                                                 std::uint64_t seed);

/// G * A for a Gaussian factor held as a dense matrix; exploits sparse A.
Matrix left_multiply(const Matrix& g, const SymmetricMatrix& a);

}  // namespace specsketch
