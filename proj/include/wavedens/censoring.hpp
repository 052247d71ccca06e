#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wavedens/errors.hpp"

namespace wavedens {

/// Right-censored observations {(Y_i, delta_i)}: delta_i = 1 means the event
/// was observed at Y_i, delta_i = 0 means the lifetime is only known to
/// exceed Y_i. `tau` is the normalization constant (original time units)
/// once the times have been rescaled to [0,1].
struct CensoredSample {
    std::vector<double> y;
    std::vector<int> delta;
    std::optional<double> tau;

    std::size_t size() const { return y.size(); }
};

/// Sample sorted by time, events before censorings at tied times; `perm`
/// maps ranked position -> original index.
struct RankedSample {
    std::vector<double> y_sorted;
    std::vector<int> delta_sorted;
    std::vector<std::size_t> perm;

    std::size_t size() const { return y_sorted.size(); }
};

enum class KmTarget { event, censoring };

/// Product-limit step function: `cdf[i]` is the estimate at the i-th ranked
/// time (right-continuous), `jumps[i]` its mass there. Points whose
/// indicator is inactive for the target carry zero jump.
struct KaplanMeierCurve {
    std::vector<double> times;
    std::vector<double> cdf;
    std::vector<double> jumps;
    KmTarget target = KmTarget::event;
};

inline RankedSample rank_sample(const CensoredSample& s) {
    const std::size_t n = s.size();
    if (n == 0) throw InvalidSampleSize("cannot rank an empty sample");
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (s.y[a] != s.y[b]) return s.y[a] < s.y[b];
        return s.delta[a] > s.delta[b];  // ties: events first
    });
    RankedSample r;
    r.y_sorted.reserve(n);
    r.delta_sorted.reserve(n);
    for (std::size_t i : idx) {
        r.y_sorted.push_back(s.y[i]);
        r.delta_sorted.push_back(s.delta[i]);
    }
    r.perm = std::move(idx);
    return r;
}

namespace detail {

// Shared product-limit recursion: with indicator d at ranked position i
// (1-based), jump_i = d_i/(N-i+1) * prod_{j<i} (1 - d_j/(N-j+1)).
inline KaplanMeierCurve km_curve(const RankedSample& r, bool use_event_indicator,
                                 KmTarget target) {
    const std::size_t n = r.size();
    KaplanMeierCurve c;
    c.target = target;
    c.times = r.y_sorted;
    c.cdf.resize(n);
    c.jumps.resize(n);
    double survival = 1.0;  // prod_{j<=i} (1 - d_j/(N-j+1))
    double cum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const int d = use_event_indicator ? r.delta_sorted[i] : 1 - r.delta_sorted[i];
        const double at_risk = static_cast<double>(n - i);
        const double jump = d ? survival / at_risk : 0.0;
        c.jumps[i] = jump;
        cum += jump;
        c.cdf[i] = cum;
        if (d) survival *= 1.0 - 1.0 / at_risk;
    }
    return c;
}

}  // namespace detail

/// Kaplan-Meier estimate of the event distribution F.
inline KaplanMeierCurve km_event(const RankedSample& r) {
    return detail::km_curve(r, true, KmTarget::event);
}

/// Kaplan-Meier estimate of the censoring distribution G (roles of
/// delta and 1-delta swapped).
inline KaplanMeierCurve km_censoring(const RankedSample& r) {
    return detail::km_curve(r, false, KmTarget::censoring);
}

/// Left-limit inverse censoring factors 1/(1 - G_hat(Y_(i)^-)) computed by
/// the product form
///
///     N/(N-i+1) * prod_{j<i} ((N-j)/(N-j+1))^{delta_(j)},
///
/// which never reaches a zero denominator at an event point.
inline std::vector<double> ipcw_factors(const RankedSample& r) {
    const std::size_t n = r.size();
    std::vector<double> f(n);
    double prod = 1.0;  // prod_{j<i} ((N-j)/(N-j+1))^{delta_j}
    for (std::size_t i = 0; i < n; ++i) {
        f[i] = static_cast<double>(n) / static_cast<double>(n - i) * prod;
        if (!(f[i] > 0.0) || !std::isfinite(f[i]))
            throw DegenerateWeight("inverse censoring factor degenerate at ranked index " +
                                   std::to_string(i + 1));
        if (r.delta_sorted[i])
            prod *= static_cast<double>(n - i - 1) / static_cast<double>(n - i);
    }
    return f;
}

/// IPCW weights w_i = delta_(i) / (1 - G_hat(Y_(i)^-)), aligned with the
/// ranked order; zero at censored positions.
inline std::vector<double> ipcw_weights(const RankedSample& r) {
    std::vector<double> w = ipcw_factors(r);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!r.delta_sorted[i]) w[i] = 0.0;
    return w;
}

}  // namespace wavedens
