#pragma once

// Gaussian fitting, histogram discretization, JSD / Wasserstein-1 distances,
// Pearson correlation, Box-Cox transformation and the one-sample KS test.

#include <cstddef>
#include <span>
#include <vector>

#include "edge/types.hpp"

namespace edge::stats {

struct GaussianEstimate {
    double mean = 0.0;
    double variance = 0.0;  // population variance (divisor = count)
    std::size_t sample_count = 0;
};

// Mean and population variance (the three-fixed-seeds protocol's estimator).
GaussianEstimate fit_gaussian(std::span<const double> samples);

struct Histogram {
    std::vector<double> edges;   // B+1 strictly increasing
    std::vector<double> masses;  // B nonnegative, summing to 1

    int bins() const { return static_cast<int>(masses.size()); }
    void validate() const;
};

std::vector<double> uniform_edges(double lo, double hi, int bins);

// Gaussian mass per bin via CDF differences; tail mass folds into the end
// bins. A degenerate (zero variance) estimate puts all mass in the bin
// containing the mean.
Histogram discretize(const GaussianEstimate& g, std::vector<double> edges);

// Empirical mass via counting; throws if a sample falls outside the grid.
Histogram discretize(std::span<const double> samples, std::vector<double> edges);

// Jensen-Shannon divergence in nats; grids must match.
double jsd(const Histogram& p, const Histogram& q);

// First-order Wasserstein distance between histograms on one grid (integral
// of |CDF_P - CDF_Q| with piecewise-linear CDFs).
double wasserstein1(const Histogram& p, const Histogram& q);

// Between two sample sets; for equal sizes this is the mean absolute
// difference of sorted order statistics, otherwise the ECDF integral.
double wasserstein1_samples(std::vector<double> xs, std::vector<double> ys);

double pearson(std::span<const double> xs, std::span<const double> ys);

struct BoxCoxResult {
    double lambda = 0.0;
    std::vector<double> transformed;
};

// Profile-log-likelihood-maximizing lambda over [lo, hi], then the
// transform y = (x^l - 1)/l (ln x as l -> 0).
BoxCoxResult box_cox(std::span<const double> samples, double lo = -20.0,
                     double hi = 20.0);

struct KsResult {
    double statistic = 0.0;
    double p_value = 0.0;
};

// One-sample KS against the given Gaussian; p-value from the asymptotic
// Kolmogorov series (100 terms).
KsResult ks_test(std::span<const double> samples, const GaussianEstimate& g);

double gaussian_cdf(double x, double mean, double stddev);

// The default comparison grid: 64 uniform bins spanning
// [min(samples, mean-4s), max(samples, mean+4s)].
std::vector<double> default_grid(const GaussianEstimate& g,
                                 std::span<const double> samples, int bins = 64);

// (jsd, w1) between the discretized Gaussian and the empirical samples on
// the default grid.
std::pair<double, double> compare_gaussian_to_samples(const GaussianEstimate& g,
                                                      std::span<const double> samples,
                                                      int bins = 64);

}  // namespace edge::stats
