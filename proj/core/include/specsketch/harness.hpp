#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "specsketch/sketch.hpp"
#include "specsketch/spectrum_spec.hpp"

namespace specsketch {

/// One estimation trial: the uniform error max_i |mu_i - lambda_i| against
/// the generator's exact spectrum, and whether it beat epsilon * ||A||_F.
struct TrialReport {
    std::uint64_t seed = 0;
    std::size_t dim = 0;
    std::size_t sketch_dim = 0;
    double epsilon = 0.0;
    std::string spectrum_kind;
    double max_abs_error = 0.0;
    bool success = false;
    double wall_time_seconds = 0.0;  // estimator only; generation excluded
    std::string estimator;
};

std::string trial_report_to_json(const TrialReport& report);

struct SweepConfig {
    SpectrumSpec spec;
    std::vector<std::size_t> sketch_dims;
    std::size_t trials = 0;
    EstimatorKind estimator = EstimatorKind::Corrected;
    /// Success threshold; 0 derives epsilon(k) = sqrt(k_constant / k) per level.
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    SketchConfig sketch;
    /// Fast-PSD outer dimension; 0 picks 4k capped at the operand dimension.
    std::size_t outer_dim = 0;
    std::size_t nnz_per_col = 4;
    /// Worker threads for trial execution; 0 = hardware concurrency.
    std::size_t workers = 0;
};

/// Runs trials per sketch dimension; per-trial seeds come from
/// derive_seed(seed, trial index), and reports are ordered by (k, trial)
/// regardless of scheduling.
std::vector<TrialReport> run_error_sweep(const SweepConfig& config);

void write_trial_reports_jsonl(std::ostream& out, const std::vector<TrialReport>& reports);
void write_sweep_summary_csv(std::ostream& out, const std::vector<TrialReport>& reports);

struct LowerBoundConfig {
    std::size_t dof = 300;
    std::vector<std::size_t> budgets;
    std::size_t trials = 2000;
    std::size_t tv_samples = 100000;
    std::uint64_t seed = 0;
    bool include_adaptive = true;
    std::size_t adaptive_dim = 0;  // 0 picks 2 * dof
};

/// Advantage curve + total-variation numbers as one JSON document.
std::string run_lowerbound_suite(const LowerBoundConfig& config);

/// Index-parallel loop with deterministic per-index work; workers = 0 uses
/// hardware concurrency.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace specsketch
