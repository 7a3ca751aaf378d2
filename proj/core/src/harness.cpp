#include "specsketch/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "specsketch/distinguisher.hpp"
#include "specsketch/errors.hpp"
#include "specsketch/fast_psd.hpp"
#include "specsketch/norms.hpp"
#include "specsketch/rng.hpp"
#include "specsketch/stats.hpp"
#include "specsketch/wishart.hpp"

namespace specsketch {

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

nlohmann::ordered_json trial_report_json(const TrialReport& r) {
    nlohmann::ordered_json j;
    j["seed"] = r.seed;
    j["dim"] = r.dim;
    j["sketch_dim"] = r.sketch_dim;
    j["epsilon"] = r.epsilon;
    j["spectrum_kind"] = r.spectrum_kind;
    j["max_abs_error"] = r.max_abs_error;
    j["success"] = r.success;
    j["wall_time_seconds"] = r.wall_time_seconds;
    j["estimator"] = r.estimator;
    return j;
}

}  // namespace

std::string trial_report_to_json(const TrialReport& report) {
    return trial_report_json(report).dump();
}

std::vector<TrialReport> run_error_sweep(const SweepConfig& config) {
    if (config.trials == 0) throw InvalidInputError("run_error_sweep: need trials >= 1");
    if (config.sketch_dims.empty())
        throw InvalidInputError("run_error_sweep: need at least one sketch dimension");

    const Spectrum truth = target_spectrum(config.spec);
    const std::size_t d = truth.size();

    if (config.estimator == EstimatorKind::FastPsd) {
        if (truth.values.back() < 0.0)
            throw InvalidInputError("run_error_sweep: fastpsd estimator requires a PSD spectrum");
    }

    double norm = 0.0;
    for (double v : truth.values) norm += v * v;
    norm = std::sqrt(norm);

    const std::size_t total = config.sketch_dims.size() * config.trials;
    std::vector<TrialReport> reports(total);

    parallel_for(total, config.workers, [&](std::size_t index) {
        const std::size_t k_index = index / config.trials;
        const std::size_t k = config.sketch_dims[k_index];
        const std::uint64_t trial_seed = derive_seed(config.seed, index);

        const SymmetricMatrix a = generate_matrix(config.spec, derive_seed(trial_seed, 0));

        const double epsilon =
            config.epsilon > 0.0
                ? config.epsilon
                : std::sqrt(config.sketch.k_constant / static_cast<double>(k));

        const auto start = std::chrono::steady_clock::now();
        SpectrumEstimate estimate;
        switch (config.estimator) {
            case EstimatorKind::Corrected:
                estimate = estimate_spectrum(a, k, derive_seed(trial_seed, 1), config.sketch);
                break;
            case EstimatorKind::Baseline:
                estimate =
                    estimate_spectrum_baseline(a, k, derive_seed(trial_seed, 1), config.sketch);
                break;
            case EstimatorKind::FastPsd: {
                FastSketchConfig fast;
                fast.inner_dim = k;
                fast.outer_dim = config.outer_dim > 0 ? config.outer_dim
                                                      : std::min(d, 4 * k);
                fast.outer_dim = std::max(fast.outer_dim, k);
                fast.nnz_per_col = config.nnz_per_col;
                fast.seed = derive_seed(trial_seed, 1);
                estimate = fast_psd_spectrum(a, fast).estimate;
                break;
            }
        }
        const auto stop = std::chrono::steady_clock::now();

        double err = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            err = std::max(err, std::abs(estimate.values[i] - truth[i]));

        TrialReport& r = reports[index];
        r.seed = trial_seed;
        r.dim = d;
        r.sketch_dim = k;
        r.epsilon = epsilon;
        r.spectrum_kind = to_string(config.spec.kind);
        r.max_abs_error = err;
        r.success = err <= epsilon * norm;
        r.wall_time_seconds = std::chrono::duration<double>(stop - start).count();
        r.estimator = to_string(config.estimator);
    });

    return reports;
}

void write_trial_reports_jsonl(std::ostream& out, const std::vector<TrialReport>& reports) {
    for (const auto& r : reports) out << trial_report_to_json(r) << '\n';
}

void write_sweep_summary_csv(std::ostream& out, const std::vector<TrialReport>& reports) {
    out << "sketch_dim,trials,epsilon,median_max_abs_error,mean_max_abs_error,"
           "success_rate,median_wall_time_seconds\n";
    std::vector<std::size_t> dims;
    for (const auto& r : reports)
        if (dims.empty() || dims.back() != r.sketch_dim) dims.push_back(r.sketch_dim);
    for (const std::size_t k : dims) {
        std::vector<double> errs, times;
        double eps = 0.0;
        std::size_t successes = 0;
        for (const auto& r : reports) {
            if (r.sketch_dim != k) continue;
            errs.push_back(r.max_abs_error);
            times.push_back(r.wall_time_seconds);
            eps = r.epsilon;
            successes += r.success ? 1 : 0;
        }
        out << k << ',' << errs.size() << ',' << eps << ',' << median(errs) << ','
            << mean(errs) << ','
            << static_cast<double>(successes) / static_cast<double>(errs.size()) << ','
            << median(times) << '\n';
    }
}

std::string run_lowerbound_suite(const LowerBoundConfig& config) {
    if (config.budgets.empty())
        throw InvalidInputError("run_lowerbound_suite: need at least one budget");

    nlohmann::ordered_json j;
    j["dof"] = config.dof;
    j["trials"] = config.trials;
    j["tv_samples"] = config.tv_samples;
    j["seed"] = config.seed;
    j["tv_limit_alpha_0.1"] = tv_limit(0.1);

    const std::size_t tv_dim = std::max<std::size_t>(1, config.dof / 10);
    const TvEstimate tv =
        tv_monte_carlo(tv_dim, config.dof, config.tv_samples, derive_seed(config.seed, 0));
    j["tv_monte_carlo"] = {{"dim", tv_dim},
                           {"dof", config.dof},
                           {"samples", tv.samples},
                           {"value", tv.value},
                           {"std_error", tv.std_error}};

    const auto curve =
        advantage_curve(config.dof, config.budgets, config.trials, derive_seed(config.seed, 1));
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& p : curve) {
        points.push_back({{"query_budget", p.query_budget},
                          {"dim", p.dim},
                          {"dof", p.dof},
                          {"advantage", p.advantage},
                          {"trials", p.trials},
                          {"seed", p.seed}});
    }
    j["advantage_curve"] = points;

    if (config.include_adaptive) {
        const std::size_t dim = config.adaptive_dim > 0 ? config.adaptive_dim : 2 * config.dof;
        const std::size_t budget = config.budgets.front();
        const auto adaptive = power_iteration_advantage(dim, config.dof, budget, config.trials,
                                                        derive_seed(config.seed, 2));
        j["adaptive_power_iteration"] = {{"query_budget", adaptive.query_budget},
                                         {"dim", adaptive.dim},
                                         {"dof", adaptive.dof},
                                         {"advantage", adaptive.advantage},
                                         {"trials", adaptive.trials}};
    }
    return j.dump(2);
}

}  // namespace specsketch
