#include "specsketch/spectrum.hpp"

#include <algorithm>

namespace specsketch {

Spectrum Spectrum::sorted(std::vector<double> v) {
    std::stable_sort(v.begin(), v.end(), [](double a, double b) { return a > b; });
    return Spectrum{std::move(v)};
}

bool Spectrum::is_sorted_non_increasing() const {
    return std::is_sorted(values.begin(), values.end(),
                          [](double a, double b) { return a > b; });
}

double Spectrum::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

}  // namespace specsketch
