// Command-line surface: estimate / sweep / lowerbound / fastpsd.
// Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 resource limit.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specsketch/errors.hpp"
#include "specsketch/fast_psd.hpp"
#include "specsketch/harness.hpp"
#include "specsketch/matrix_io.hpp"
#include "specsketch/sketch.hpp"

namespace {

using namespace specsketch;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNumericalFailure = 3;
constexpr int kExitResourceLimit = 4;

SymmetricMatrix load_matrix(const std::string& path, const std::string& format) {
    if (format == "dense") return read_dense_matrix_file(path);
    if (format == "mm") return read_matrix_market_file(path);
    throw InvalidInputError("unknown input format '" + format + "' (expected dense or mm)");
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot open output file: " + path);
    return out;
}

int run_estimate(const std::string& input, const std::string& format, std::size_t k,
                 double epsilon, std::uint64_t seed) {
    const SymmetricMatrix a = load_matrix(input, format);
    if (k == 0) {
        if (epsilon <= 0.0)
            throw InvalidInputError("estimate: provide --k or a positive --epsilon");
        k = sketch_dim_for_tolerance(epsilon);
    }
    const auto result = estimate_spectrum_with_outcome(a, k, seed);
    nlohmann::ordered_json j;
    j["dim"] = a.dim();
    j["sketch_dim"] = k;
    j["seed"] = seed;
    j["estimator"] = to_string(result.estimate.kind);
    if (epsilon > 0.0) j["epsilon"] = epsilon;
    j["sketch_trace"] = result.outcome.sketch_trace;
    j["values"] = result.estimate.values;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

int run_sweep(const std::string& spec_path, const std::vector<std::size_t>& k_list,
              std::size_t trials, const std::string& estimator, std::uint64_t seed,
              const std::string& out_path, std::size_t workers) {
    SweepConfig config;
    config.spec = parse_spectrum_spec_file(spec_path);
    config.sketch_dims = k_list;
    config.trials = trials;
    config.estimator = estimator_kind_from_string(estimator);
    config.seed = seed;
    config.workers = workers;
    const auto reports = run_error_sweep(config);

    auto jsonl = open_output(out_path);
    write_trial_reports_jsonl(jsonl, reports);
    auto csv = open_output(out_path + ".summary.csv");
    write_sweep_summary_csv(csv, reports);
    std::cerr << "wrote " << reports.size() << " trial reports to " << out_path
              << " and a summary to " << out_path << ".summary.csv\n";
    return kExitOk;
}

int run_lowerbound(std::size_t dof, const std::vector<std::size_t>& k_list, std::size_t trials,
                   std::size_t samples, std::uint64_t seed, const std::string& out_path) {
    LowerBoundConfig config;
    config.dof = dof;
    config.budgets = k_list;
    config.trials = trials;
    config.tv_samples = samples;
    config.seed = seed;
    const std::string report = run_lowerbound_suite(config);
    if (out_path.empty()) {
        std::cout << report << '\n';
    } else {
        auto out = open_output(out_path);
        out << report << '\n';
        std::cerr << "wrote lower-bound report to " << out_path << '\n';
    }
    return kExitOk;
}

int run_fastpsd(const std::string& input, std::size_t m, std::size_t s, std::size_t k,
                std::uint64_t seed) {
    const SymmetricMatrix a = read_matrix_market_file(input);
    FastSketchConfig config;
    config.outer_dim = m;
    config.nnz_per_col = s;
    config.inner_dim = k;
    config.seed = seed;
    const auto out = fast_psd_spectrum(a, config);
    nlohmann::ordered_json j;
    j["dim"] = a.dim();
    j["outer_dim"] = m;
    j["nnz_per_col"] = s;
    j["inner_dim"] = k;
    j["seed"] = seed;
    j["estimator"] = to_string(out.estimate.kind);
    j["dense_fallback"] = out.dense_fallback;
    j["values"] = out.estimate.values;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed spectrum estimation from bilinear Gaussian sketches"};
    app.require_subcommand(1);

    // estimate
    auto* estimate = app.add_subcommand("estimate", "Estimate all eigenvalues of a matrix file");
    std::string est_input, est_format = "dense";
    std::size_t est_k = 0;
    double est_epsilon = 0.0;
    std::uint64_t est_seed = 0;
    estimate->add_option("--input", est_input, "Matrix file")->required();
    estimate->add_option("--k", est_k, "Sketch rows");
    estimate->add_option("--epsilon", est_epsilon, "Target additive error (picks k when --k absent)");
    estimate->add_option("--seed", est_seed, "RNG seed")->required();
    estimate->add_option("--format", est_format, "Input format: dense or mm")
        ->check(CLI::IsMember({"dense", "mm"}));

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Error sweep over sketch dimensions");
    std::string sweep_spec, sweep_estimator = "corrected", sweep_out;
    std::vector<std::size_t> sweep_ks;
    std::size_t sweep_trials = 0, sweep_workers = 0;
    std::uint64_t sweep_seed = 0;
    sweep->add_option("--spec", sweep_spec, "Spectrum spec file")->required();
    sweep->add_option("--k-list", sweep_ks, "Sketch dimensions")->required()->delimiter(',');
    sweep->add_option("--trials", sweep_trials, "Trials per dimension")->required();
    sweep->add_option("--estimator", sweep_estimator, "corrected | baseline | fastpsd")
        ->check(CLI::IsMember({"corrected", "baseline", "fastpsd"}));
    sweep->add_option("--seed", sweep_seed, "RNG seed")->required();
    sweep->add_option("--out", sweep_out, "Output JSONL path")->required();
    sweep->add_option("--workers", sweep_workers, "Worker threads (0 = hardware)");

    // lowerbound
    auto* lower = app.add_subcommand("lowerbound", "Wishart distinguishing experiments");
    std::size_t lb_r = 0, lb_trials = 2000, lb_samples = 100000;
    std::vector<std::size_t> lb_ks;
    std::uint64_t lb_seed = 0;
    std::string lb_out;
    lower->add_option("--r", lb_r, "Degrees of freedom")->required();
    lower->add_option("--k-list", lb_ks, "Query budgets")->required()->delimiter(',');
    lower->add_option("--trials", lb_trials, "Trials per budget");
    lower->add_option("--samples", lb_samples, "Monte-Carlo samples for the TV estimate");
    lower->add_option("--seed", lb_seed, "RNG seed")->required();
    lower->add_option("--out", lb_out, "Output JSON path (stdout when omitted)");

    // fastpsd
    auto* fast = app.add_subcommand("fastpsd", "Sparse-PSD fast spectrum estimate");
    std::string fast_input;
    std::size_t fast_m = 0, fast_s = 4, fast_k = 0;
    std::uint64_t fast_seed = 0;
    fast->add_option("--input", fast_input, "MatrixMarket file")->required();
    fast->add_option("--m", fast_m, "Outer embedding rows")->required();
    fast->add_option("--s", fast_s, "Nonzeros per embedding column");
    fast->add_option("--k", fast_k, "Inner Gaussian sketch rows")->required();
    fast->add_option("--seed", fast_seed, "RNG seed")->required();

    try {
        app.parse(argc, argv);
        if (estimate->parsed())
            return run_estimate(est_input, est_format, est_k, est_epsilon, est_seed);
        if (sweep->parsed())
            return run_sweep(sweep_spec, sweep_ks, sweep_trials, sweep_estimator, sweep_seed,
                             sweep_out, sweep_workers);
        if (lower->parsed())
            return run_lowerbound(lb_r, lb_ks, lb_trials, lb_samples, lb_seed, lb_out);
        if (fast->parsed()) return run_fastpsd(fast_input, fast_m, fast_s, fast_k, fast_seed);
        return kExitInvalidInput;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumericalFailure;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}
