#pragma once

#include <cstdint>
#include <vector>

#include "specsketch/symmetric_matrix.hpp"

namespace specsketch {

enum class WishartRankDecision { BaseRank, RankPlusTwo };

/// Bayes-optimal likelihood-ratio test at equal priors for a k x k corner
/// drawn from W(k, r) or W(k, r+2): decide RankPlusTwo iff the log density
/// ratio is >= 0.  A singular corner decides BaseRank (the ratio vanishes on
/// the boundary).
WishartRankDecision lr_distinguisher(const SymmetricMatrix& corner, std::size_t dof);

struct DistinguishingOutcome {
    std::size_t query_budget = 0;  // k, columns of the operand observed
    std::size_t dim = 0;           // corner size
    std::size_t dof = 0;           // r
    double advantage = 0.0;        // 2 * (success rate - 1/2), in [-1, 1]
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

/// Empirical advantage of the likelihood-ratio tester at each query budget,
/// against an equal mix of W(k, r) and W(k, r+2) instances.
std::vector<DistinguishingOutcome> advantage_curve(std::size_t dof,
                                                   const std::vector<std::size_t>& budgets,
                                                   std::size_t trials, std::uint64_t seed);

struct AdaptiveTesterReport {
    double advantage = 0.0;       // best-threshold bound on the tester's advantage
    std::size_t query_budget = 0;
    std::size_t dim = 0;          // ambient dimension the tester works in
    std::size_t dof = 0;
    std::size_t trials = 0;
};

/// Adaptive power-iteration tester: spends the whole query budget on matrix-
/// vector products v <- A v and keeps the final Rayleigh quotient as its
/// statistic.  The reported advantage is the Kolmogorov-Smirnov distance
/// between the statistic's samples under the two hypotheses, i.e. the best
/// any threshold rule on that statistic could achieve.
AdaptiveTesterReport power_iteration_advantage(std::size_t dim, std::size_t dof,
                                               std::size_t budget, std::size_t trials,
                                               std::uint64_t seed);

}  // namespace specsketch
