#pragma once

#include <vector>

namespace specsketch {

/// Eigenvalues (or singular values) sorted non-increasing.
struct Spectrum {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }

    /// Stable descending sort; ties keep their original order.
    static Spectrum sorted(std::vector<double> v);

    bool is_sorted_non_increasing() const;
    double sum() const;
};

}  // namespace specsketch
