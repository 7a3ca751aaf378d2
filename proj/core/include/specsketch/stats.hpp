#pragma once

#include <vector>

namespace specsketch {

double mean(const std::vector<double>& v);
double sample_variance(const std::vector<double>& v);
double median(std::vector<double> v);
double quantile(std::vector<double> v, double q);

double standard_normal_cdf(double x);

/// One-sample Kolmogorov-Smirnov statistic against the standard normal.
double ks_statistic_normal(std::vector<double> samples);

/// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace specsketch
