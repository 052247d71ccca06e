#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wavedens/baselines.hpp"

namespace wavedens {

/// Linear-interpolation empirical quantile (R type 7) of a sorted vector.
inline double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty vector");
    if (sorted.size() == 1) return sorted[0];
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

struct MomentSummary {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation
    double min = 0.0;
    double max = 0.0;
};

inline MomentSummary summarize(const std::vector<double>& v) {
    MomentSummary m;
    if (v.empty()) return m;
    m.min = m.max = v[0];
    double sum = 0.0;
    for (double x : v) {
        sum += x;
        m.min = std::min(m.min, x);
        m.max = std::max(m.max, x);
    }
    m.mean = sum / static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - m.mean) * (x - m.mean);
    m.stddev = v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1)) : 0.0;
    return m;
}

/// Anderson-Darling statistic for composite normality (mean and variance
/// estimated from the data), with the small-sample adjustment
/// A*^2 = A^2 (1 + 0.75/n + 2.25/n^2). Reject normality at the 1% level
/// when A*^2 exceeds 1.035.
inline constexpr double kAndersonDarling1pct = 1.035;

inline double anderson_darling_normal(std::vector<double> values) {
    const std::size_t n = values.size();
    if (n < 8) throw std::invalid_argument("Anderson-Darling needs at least 8 values");
    const MomentSummary m = summarize(values);
    if (m.stddev <= 0.0) throw std::invalid_argument("Anderson-Darling: zero variance");
    std::sort(values.begin(), values.end());
    double a2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double zi = normal_cdf((values[i] - m.mean) / m.stddev);
        double zrev = normal_cdf((values[n - 1 - i] - m.mean) / m.stddev);
        zi = std::clamp(zi, 1e-15, 1.0 - 1e-15);
        zrev = std::clamp(zrev, 1e-15, 1.0 - 1e-15);
        a2 += (2.0 * static_cast<double>(i) + 1.0) * (std::log(zi) + std::log1p(-zrev));
    }
    a2 = -static_cast<double>(n) - a2 / static_cast<double>(n);
    const double nd = static_cast<double>(n);
    return a2 * (1.0 + 0.75 / nd + 2.25 / (nd * nd));
}

/// Ordinary least-squares slope of y against x.
inline double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("slope needs two equal-length vectors");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace wavedens
