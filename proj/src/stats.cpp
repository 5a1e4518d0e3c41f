#include "edge/stats.hpp"

#include <algorithm>
#include <cmath>

namespace edge::stats {

GaussianEstimate fit_gaussian(std::span<const double> samples) {
    if (samples.empty()) throw ValidationError("fit_gaussian: no samples");
    double sum = 0.0;
    for (double x : samples) sum += x;
    const double mean = sum / static_cast<double>(samples.size());
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    return {mean, ss / static_cast<double>(samples.size()), samples.size()};
}

void Histogram::validate() const {
    if (edges.size() != masses.size() + 1 || masses.empty())
        throw ValidationError("histogram shape mismatch");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (!(edges[i] < edges[i + 1]))
            throw ValidationError("histogram edges not strictly increasing");
    double total = 0.0;
    for (double m : masses) {
        if (m < 0.0) throw ValidationError("negative histogram mass");
        total += m;
    }
    if (std::fabs(total - 1.0) > 1e-9)
        throw ValidationError("histogram mass sums to " + std::to_string(total));
}

std::vector<double> uniform_edges(double lo, double hi, int bins) {
    if (!(lo < hi) || bins < 1) throw ValidationError("bad grid request");
    std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i)
        edges[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / bins;
    return edges;
}

double gaussian_cdf(double x, double mean, double stddev) {
    return 0.5 * std::erfc(-(x - mean) / (stddev * std::sqrt(2.0)));
}

Histogram discretize(const GaussianEstimate& g, std::vector<double> edges) {
    Histogram h;
    h.edges = std::move(edges);
    const int bins = static_cast<int>(h.edges.size()) - 1;
    if (bins < 1) throw ValidationError("grid needs at least one bin");
    h.masses.assign(static_cast<std::size_t>(bins), 0.0);
    if (g.variance <= 0.0) {
        if (g.mean < h.edges.front() || g.mean > h.edges.back())
            throw ValidationError("degenerate Gaussian mean outside grid");
        int bin = static_cast<int>(std::upper_bound(h.edges.begin(), h.edges.end(),
                                                    g.mean) -
                                   h.edges.begin()) -
                  1;
        bin = std::clamp(bin, 0, bins - 1);
        h.masses[static_cast<std::size_t>(bin)] = 1.0;
        return h;
    }
    const double sd = std::sqrt(g.variance);
    double prev = gaussian_cdf(h.edges[0], g.mean, sd);
    for (int b = 0; b < bins; ++b) {
        const double next = gaussian_cdf(h.edges[static_cast<std::size_t>(b) + 1],
                                         g.mean, sd);
        h.masses[static_cast<std::size_t>(b)] = next - prev;
        prev = next;
    }
    // fold the tails into the end bins so mass is exactly 1
    h.masses.front() += gaussian_cdf(h.edges.front(), g.mean, sd);
    h.masses.back() += 1.0 - gaussian_cdf(h.edges.back(), g.mean, sd);
    h.validate();
    return h;
}

Histogram discretize(std::span<const double> samples, std::vector<double> edges) {
    if (samples.empty()) throw ValidationError("discretize: no samples");
    Histogram h;
    h.edges = std::move(edges);
    const int bins = static_cast<int>(h.edges.size()) - 1;
    if (bins < 1) throw ValidationError("grid needs at least one bin");
    h.masses.assign(static_cast<std::size_t>(bins), 0.0);
    const double share = 1.0 / static_cast<double>(samples.size());
    for (double x : samples) {
        if (x < h.edges.front() || x > h.edges.back())
            throw ValidationError("sample " + std::to_string(x) + " outside grid [" +
                                  std::to_string(h.edges.front()) + ", " +
                                  std::to_string(h.edges.back()) + "]");
        int bin = static_cast<int>(std::upper_bound(h.edges.begin(), h.edges.end(), x) -
                                   h.edges.begin()) -
                  1;
        bin = std::clamp(bin, 0, bins - 1);
        h.masses[static_cast<std::size_t>(bin)] += share;
    }
    return h;
}

namespace {

void check_same_grid(const Histogram& p, const Histogram& q) {
    if (p.edges.size() != q.edges.size())
        throw ValidationError("histograms use different grids");
    for (std::size_t i = 0; i < p.edges.size(); ++i)
        if (p.edges[i] != q.edges[i])
            throw ValidationError("histograms use different grids");
}

}  // namespace

double jsd(const Histogram& p, const Histogram& q) {
    check_same_grid(p, q);
    double total = 0.0;
    for (std::size_t i = 0; i < p.masses.size(); ++i) {
        const double a = p.masses[i];
        const double b = q.masses[i];
        const double mid = 0.5 * (a + b);
        if (a > 0.0) total += 0.5 * a * std::log(a / mid);
        if (b > 0.0) total += 0.5 * b * std::log(b / mid);
    }
    return total;
}

double wasserstein1(const Histogram& p, const Histogram& q) {
    check_same_grid(p, q);
    double total = 0.0;
    double cp = 0.0, cq = 0.0;
    for (std::size_t i = 0; i < p.masses.size(); ++i) {
        const double dl = cp - cq;
        cp += p.masses[i];
        cq += q.masses[i];
        const double dr = cp - cq;
        const double width = p.edges[i + 1] - p.edges[i];
        if (dl * dr >= 0.0) {
            total += width * 0.5 * (std::fabs(dl) + std::fabs(dr));
        } else {
            // CDF difference crosses zero inside the bin
            total += width * 0.5 * (dl * dl + dr * dr) / (std::fabs(dl) + std::fabs(dr));
        }
    }
    return total;
}

double wasserstein1_samples(std::vector<double> xs, std::vector<double> ys) {
    if (xs.empty() || ys.empty()) throw ValidationError("wasserstein1: empty input");
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    if (xs.size() == ys.size()) {
        double total = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) total += std::fabs(xs[i] - ys[i]);
        return total / static_cast<double>(xs.size());
    }
    // integral of |ECDF_x - ECDF_y| over merged breakpoints
    double total = 0.0;
    std::size_t i = 0, j = 0;
    double prev = std::min(xs.front(), ys.front());
    while (i < xs.size() || j < ys.size()) {
        const double xi = i < xs.size() ? xs[i] : std::numeric_limits<double>::infinity();
        const double yj = j < ys.size() ? ys[j] : std::numeric_limits<double>::infinity();
        const double cur = std::min(xi, yj);
        const double fx = static_cast<double>(i) / static_cast<double>(xs.size());
        const double fy = static_cast<double>(j) / static_cast<double>(ys.size());
        total += std::fabs(fx - fy) * (cur - prev);
        prev = cur;
        if (xi <= yj)
            ++i;
        else
            ++j;
    }
    return total;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw ValidationError("pearson: need two equal lists of length >= 2");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0)
        throw ValidationError("pearson: zero variance input");
    return sxy / std::sqrt(sxx * syy);
}

namespace {

// Profile log-likelihood of the Box-Cox transform at lambda.
double box_cox_loglik(std::span<const double> samples, double lambda,
                      double log_sum) {
    const double n = static_cast<double>(samples.size());
    std::vector<double> y(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        y[i] = std::fabs(lambda) < 1e-8
                   ? std::log(samples[i])
                   : (std::pow(samples[i], lambda) - 1.0) / lambda;
    }
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : y) ss += (v - mean) * (v - mean);
    const double var = ss / n;
    if (var <= 0.0) return -std::numeric_limits<double>::infinity();
    return -0.5 * n * std::log(var) + (lambda - 1.0) * log_sum;
}

}  // namespace

BoxCoxResult box_cox(std::span<const double> samples, double lo, double hi) {
    if (samples.size() < 2) throw ValidationError("box_cox: need >= 2 samples");
    double log_sum = 0.0;
    for (double x : samples) {
        if (!(x > 0.0)) throw ValidationError("box_cox: non-positive sample");
        log_sum += std::log(x);
    }
    const double spread = *std::max_element(samples.begin(), samples.end()) -
                          *std::min_element(samples.begin(), samples.end());
    if (spread <= 0.0)
        throw ValidationError("box_cox: constant samples, likelihood degenerate");

    // Coarse grid, then golden-section refinement around the best cell.
    const int grid = 400;
    double best_l = lo, best_v = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= grid; ++i) {
        const double l = lo + (hi - lo) * i / grid;
        const double v = box_cox_loglik(samples, l, log_sum);
        if (v > best_v) {
            best_v = v;
            best_l = l;
        }
    }
    const double cell = (hi - lo) / grid;
    double a = std::max(lo, best_l - cell), b = std::min(hi, best_l + cell);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = box_cox_loglik(samples, x1, log_sum);
    double f2 = box_cox_loglik(samples, x2, log_sum);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = box_cox_loglik(samples, x2, log_sum);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = box_cox_loglik(samples, x1, log_sum);
        }
    }
    BoxCoxResult out;
    out.lambda = 0.5 * (a + b);
    out.transformed.resize(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        out.transformed[i] = std::fabs(out.lambda) < 1e-8
                                 ? std::log(samples[i])
                                 : (std::pow(samples[i], out.lambda) - 1.0) / out.lambda;
    return out;
}

KsResult ks_test(std::span<const double> samples, const GaussianEstimate& g) {
    if (samples.size() < 5) throw ValidationError("ks_test: need >= 5 samples");
    if (!(g.variance > 0.0)) throw ValidationError("ks_test: degenerate Gaussian");
    std::vector<double> xs(samples.begin(), samples.end());
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    const double sd = std::sqrt(g.variance);
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = gaussian_cdf(xs[i], g.mean, sd);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(hi - f, f - lo));
    }
    const double lambda = std::sqrt(n) * d;
    double p = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        p += (k % 2 == 1 ? 2.0 : -2.0) * term;
    }
    return {d, std::clamp(p, 0.0, 1.0)};
}

std::vector<double> default_grid(const GaussianEstimate& g,
                                 std::span<const double> samples, int bins) {
    if (samples.empty()) throw ValidationError("default_grid: no samples");
    const double sd = std::sqrt(std::max(g.variance, 0.0));
    double lo = std::min(*std::min_element(samples.begin(), samples.end()),
                         g.mean - 4.0 * sd);
    double hi = std::max(*std::max_element(samples.begin(), samples.end()),
                         g.mean + 4.0 * sd);
    if (!(lo < hi)) {  // degenerate all-equal case
        lo -= 0.5e-9;
        hi += 0.5e-9;
    }
    return uniform_edges(lo, hi, bins);
}

std::pair<double, double> compare_gaussian_to_samples(const GaussianEstimate& g,
                                                      std::span<const double> samples,
                                                      int bins) {
    const auto edges = default_grid(g, samples, bins);
    const Histogram hp = discretize(g, edges);
    const Histogram hq = discretize(samples, edges);
    return {jsd(hp, hq), wasserstein1(hp, hq)};
}

}  // namespace edge::stats
