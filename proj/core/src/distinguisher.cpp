#include "specsketch/distinguisher.hpp"

#include <cmath>

#include "specsketch/errors.hpp"
#include "specsketch/rng.hpp"
#include "specsketch/stats.hpp"
#include "specsketch/wishart.hpp"

namespace specsketch {

WishartRankDecision lr_distinguisher(const SymmetricMatrix& corner, std::size_t dof) {
    const auto ratio = try_wishart_log_density_ratio(corner, dof);
    if (!ratio) return WishartRankDecision::BaseRank;
    return *ratio >= 0.0 ? WishartRankDecision::RankPlusTwo : WishartRankDecision::BaseRank;
}

std::vector<DistinguishingOutcome> advantage_curve(std::size_t dof,
                                                   const std::vector<std::size_t>& budgets,
                                                   std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw InvalidInputError("advantage_curve: need trials >= 1");
    std::vector<DistinguishingOutcome> outcomes;
    outcomes.reserve(budgets.size());
    std::size_t curve_index = 0;
    for (const std::size_t k : budgets) {
        if (k == 0 || k > dof)
            throw InvalidInputError("advantage_curve: budgets must lie in [1, dof]");
        const std::uint64_t point_seed = derive_seed(seed, curve_index++);
        std::size_t correct = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            const std::uint64_t trial_seed = derive_seed(point_seed, t);
            GaussianStream coin(trial_seed);
            const bool is_plus_two = coin.next_uniform() < 0.5;
            const WishartSample sample =
                sample_wishart(k, is_plus_two ? dof + 2 : dof, derive_seed(trial_seed, 1));
            const WishartRankDecision decision = lr_distinguisher(sample.values, dof);
            const bool said_plus_two = decision == WishartRankDecision::RankPlusTwo;
            if (said_plus_two == is_plus_two) ++correct;
        }
        DistinguishingOutcome outcome;
        outcome.query_budget = k;
        outcome.dim = k;
        outcome.dof = dof;
        outcome.trials = trials;
        outcome.seed = point_seed;
        outcome.advantage =
            2.0 * (static_cast<double>(correct) / static_cast<double>(trials) - 0.5);
        outcomes.push_back(outcome);
    }
    return outcomes;
}

namespace {

// Rayleigh quotient reached by `budget` matrix-vector products against an
// implicit Wishart operand A = G G^T held as its n x r factor.
double power_iteration_statistic(std::size_t dim, std::size_t dof, std::size_t budget,
                                 std::uint64_t seed) {
    GaussianStream stream(seed);
    Matrix g(dim, dof);
    for (double& v : g.data) v = stream.next();

    std::vector<double> v(dim), tmp(dof), w(dim);
    double norm2 = 0.0;
    for (double& x : v) {
        x = stream.next();
        norm2 += x * x;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& x : v) x *= inv;

    double rayleigh = 0.0;
    for (std::size_t step = 0; step < budget; ++step) {
        // w = G (G^T v), one query
        for (std::size_t j = 0; j < dof; ++j) tmp[j] = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double* gi = g.row(i);
            const double vi = v[i];
            if (vi == 0.0) continue;
            for (std::size_t j = 0; j < dof; ++j) tmp[j] += gi[j] * vi;
        }
        double wnorm2 = 0.0;
        rayleigh = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double* gi = g.row(i);
            double s = 0.0;
            for (std::size_t j = 0; j < dof; ++j) s += gi[j] * tmp[j];
            w[i] = s;
            wnorm2 += s * s;
            rayleigh += s * v[i];
        }
        if (wnorm2 == 0.0) break;
        const double winv = 1.0 / std::sqrt(wnorm2);
        for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] * winv;
    }
    return rayleigh;
}

}  // namespace

AdaptiveTesterReport power_iteration_advantage(std::size_t dim, std::size_t dof,
                                               std::size_t budget, std::size_t trials,
                                               std::uint64_t seed) {
    if (dim < dof) throw InvalidInputError("power_iteration_advantage: need dim >= dof");
    if (budget == 0 || trials == 0)
        throw InvalidInputError("power_iteration_advantage: budget and trials must be positive");
    std::vector<double> base, plus_two;
    base.reserve(trials);
    plus_two.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        base.push_back(power_iteration_statistic(dim, dof, budget, derive_seed(seed, 2 * t)));
        plus_two.push_back(
            power_iteration_statistic(dim, dof + 2, budget, derive_seed(seed, 2 * t + 1)));
    }
    AdaptiveTesterReport report;
    report.query_budget = budget;
    report.dim = dim;
    report.dof = dof;
    report.trials = trials;
    report.advantage = ks_statistic_two_sample(std::move(base), std::move(plus_two));
    return report;
}

}  // namespace specsketch
