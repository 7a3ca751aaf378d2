#pragma once

#include <cstdint>
#include <random>

namespace specsketch {

// Seed splitting scheme used everywhere a run fans out into independent
// trials: sub_seed = splitmix64(seed XOR splitmix64(index + 1)).  The split
// is stateless, so trial i can be regenerated without touching trials < i.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic stream of standard normal deviates.
///
/// Normals come from the Marsaglia polar method driven by std::mt19937_64,
/// whose output sequence is pinned by the C++ standard.  Given the same seed
/// the stream is bit-identical on the same build; bit-reproducibility across
/// standard libraries / libm versions is not a goal.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    /// One N(0,1) draw.
    double next();

    /// One N(0, stddev^2) draw.
    double next(double stddev) { return stddev * next(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_uniform();

    /// Uniform integer in [0, bound) by rejection; bound must be positive.
    std::uint64_t next_below(std::uint64_t bound);

    /// Fair coin as +1.0 / -1.0.
    double next_sign();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace specsketch
