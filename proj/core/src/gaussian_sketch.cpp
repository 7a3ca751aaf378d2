#include "specsketch/gaussian_sketch.hpp"

#include <cmath>

#include "specsketch/errors.hpp"
#include "specsketch/rng.hpp"

namespace specsketch {

GaussianSketchMatrix sample_gaussian_sketch(std::size_t k, std::size_t d, std::uint64_t seed) {
    if (k == 0 || d == 0)
        throw InvalidInputError("sample_gaussian_sketch: dimensions must be positive");
    GaussianSketchMatrix g;
    g.rows = k;
    g.cols = d;
    g.seed = seed;
    g.entries = Matrix(k, d);
    GaussianStream stream(seed);
    const double stddev = 1.0 / std::sqrt(static_cast<double>(k));
    for (double& v : g.entries.data) v = stream.next(stddev);
    return g;
}

}  // namespace specsketch
