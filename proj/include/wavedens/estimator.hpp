#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wavedens/censoring.hpp"
#include "wavedens/errors.hpp"
#include "wavedens/periodized.hpp"
#include "wavedens/quadrature.hpp"

namespace wavedens {

enum class EstimatorKind { partial, complete };
enum class Postprocess { raw, clip, clip_renorm };

inline constexpr int kMaxLevel = 16;  // caps the 2^J coefficient vector

/// Linear wavelet density estimate on the normalized scale [0,1]:
///
///     f_hat(x) = sum_{k=0}^{2^J - 1} coeffs[k] * phi^per_{J,k}(x).
///
/// `tau` carries the original time unit, `kind` which weight scheme built
/// the coefficients, `postprocess` how evaluation treats negative values.
/// `renorm_mass` is the clipped integral cached by postprocess(clip_renorm).
struct DensityEstimate {
    int level = 0;
    std::vector<double> coeffs;
    WaveletFilter filter;
    double tau = 1.0;
    EstimatorKind kind = EstimatorKind::partial;
    Postprocess postprocess = Postprocess::raw;
    double renorm_mass = 1.0;
};

/// Plug-in variance of f_hat^PD at one point.
struct VarianceEstimate {
    double x = 0.0;
    double value = 0.0;      // clamped at 0 for reporting
    double diagonal = 0.0;   // (1/N) sum_k sigma_kk phi_k(x)^2
    double cross = 0.0;      // (2/N) sum_{k<l} sigma_kl phi_k(x) phi_l(x)
};

/// Rescales all times by tau = max y so the largest observation sits at 1.
inline CensoredSample normalize(const CensoredSample& s) {
    if (s.size() == 0) throw InvalidSampleSize("cannot normalize an empty sample");
    double tau = 0.0;
    for (double v : s.y) tau = std::max(tau, v);
    if (tau <= 0.0) throw AllZeroSample("all observation times are zero");
    CensoredSample out;
    out.y.reserve(s.size());
    for (double v : s.y) out.y.push_back(v / tau);
    out.delta = s.delta;
    out.tau = tau;
    return out;
}

enum class LevelLog { natural, base2 };

/// Resolution level rule J = floor(log2 N - log2 log N), clamped to
/// [0, kMaxLevel]. The inner logarithm defaults to the natural log; pass
/// LevelLog::base2 for the other reading of the rule.
inline int select_level(std::int64_t n, LevelLog inner = LevelLog::natural) {
    if (n < 2) throw InvalidSampleSize("level rule needs N >= 2");
    const double nd = static_cast<double>(n);
    const double inner_log = inner == LevelLog::natural ? std::log(nd) : std::log2(nd);
    const int j = static_cast<int>(std::floor(std::log2(nd) - std::log2(inner_log)));
    return std::clamp(j, 0, kMaxLevel);
}

namespace detail {

inline void check_fit_inputs(const CensoredSample& s, int level) {
    if (!s.tau) throw InvalidSampleSize("sample must be normalized before fitting");
    if (level < 0 || level > kMaxLevel)
        throw ConfigError("resolution level must be in [0, " + std::to_string(kMaxLevel) + "]");
}

// coeffs[k] = (1/N) sum_i weight[i] * phi^per_{J,k}(y_ranked[i])
inline std::vector<double> weighted_coefficients(const RankedSample& r,
                                                 const std::vector<double>& weight,
                                                 const ScalingEvaluator& phi, int level) {
    const std::size_t n = r.size();
    std::vector<double> coeffs(std::size_t{1} << level, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (weight[i] == 0.0) continue;
        const double w = weight[i] / static_cast<double>(n);
        for_each_periodized(phi, level, r.y_sorted[i],
                            [&](std::int64_t k, double v) { coeffs[k] += w * v; });
    }
    return coeffs;
}

}  // namespace detail

/// Partial-data estimator: IPCW-weighted empirical coefficients
/// coeffs_k = (1/N) sum_i delta_i / (1 - G_hat(Y_i^-)) phi^per_{J,k}(Y_i);
/// only uncensored observations contribute.
inline DensityEstimate fit_partial(const CensoredSample& s, const WaveletFilter& filter,
                                   int level, int depth = kDefaultDepth) {
    detail::check_fit_inputs(s, level);
    const RankedSample r = rank_sample(s);
    const std::vector<double> w = ipcw_weights(r);
    const ScalingEvaluator phi(filter, depth);
    DensityEstimate e;
    e.level = level;
    e.coeffs = detail::weighted_coefficients(r, w, phi, level);
    e.filter = filter;
    e.tau = *s.tau;
    e.kind = EstimatorKind::partial;
    return e;
}

namespace detail {

// Complete-data weights after `steps` rounds of the inductive bias
// correction: alpha_i = (1 - 1(delta_i=0)(1-F_hat(Y_i)) sum_{l=0}^{steps}
// F_hat(Y_i)^l) / (1 - G_hat(Y_i^-)). steps = 0 is the plain Eq. 31-32
// scheme; steps -> infinity collapses geometrically onto the partial-data
// weights wherever F_hat < 1.
inline std::vector<double> complete_weights(const RankedSample& r, std::int64_t steps) {
    const std::vector<double> inv_g = ipcw_factors(r);
    const KaplanMeierCurve f_curve = km_event(r);
    std::vector<double> alpha(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        double a = 1.0;
        if (!r.delta_sorted[i]) {
            const double fhat = f_curve.cdf[i];
            double geo = 0.0, p = 1.0;
            for (std::int64_t l = 0; l <= steps; ++l) {
                geo += p;
                p *= fhat;
            }
            a = 1.0 - (1.0 - fhat) * geo;
        }
        alpha[i] = a * inv_g[i];
    }
    return alpha;
}

}  // namespace detail

/// Complete-data estimator of Eq-31/32 form: every observation contributes
/// through alpha_i = [1 - 1(delta_i=0)(1 - F_hat(Y_i))] / (1 - G_hat(Y_i^-)).
/// Kept for comparison purposes; it is biased, unlike fit_partial.
inline DensityEstimate fit_complete(const CensoredSample& s, const WaveletFilter& filter,
                                    int level, int depth = kDefaultDepth) {
    detail::check_fit_inputs(s, level);
    const RankedSample r = rank_sample(s);
    const std::vector<double> alpha = detail::complete_weights(r, 0);
    const ScalingEvaluator phi(filter, depth);
    DensityEstimate e;
    e.level = level;
    e.coeffs = detail::weighted_coefficients(r, alpha, phi, level);
    e.filter = filter;
    e.tau = *s.tau;
    e.kind = EstimatorKind::complete;
    return e;
}

/// The m-step bias-corrected complete-data estimator (truncated geometric
/// correction). As steps grows the coefficients converge to fit_partial's
/// at rate max_i F_hat(Y_i) over the censored points.
inline DensityEstimate fit_complete_bias_corrected(const CensoredSample& s,
                                                   const WaveletFilter& filter, int level,
                                                   std::int64_t steps,
                                                   int depth = kDefaultDepth) {
    detail::check_fit_inputs(s, level);
    const RankedSample r = rank_sample(s);
    const std::vector<double> alpha = detail::complete_weights(r, steps);
    const ScalingEvaluator phi(filter, depth);
    DensityEstimate e;
    e.level = level;
    e.coeffs = detail::weighted_coefficients(r, alpha, phi, level);
    e.filter = filter;
    e.tau = *s.tau;
    e.kind = EstimatorKind::complete;
    return e;
}

/// f_hat at one normalized point, honoring the estimate's postprocess mode.
inline double evaluate_at(const DensityEstimate& e, double x, int depth = kDefaultDepth) {
    const ScalingEvaluator phi(e.filter, depth);
    double acc = 0.0;
    for_each_periodized(phi, e.level, x,
                        [&](std::int64_t k, double v) { acc += e.coeffs[k] * v; });
    if (e.postprocess == Postprocess::raw) return acc;
    acc = std::max(0.0, acc);
    if (e.postprocess == Postprocess::clip_renorm) acc /= e.renorm_mass;
    return acc;
}

/// f_hat over a grid of normalized points in [0,1].
inline std::vector<double> evaluate(const DensityEstimate& e, std::span<const double> xs,
                                    int depth = kDefaultDepth) {
    const ScalingEvaluator phi(e.filter, depth);
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) {
        double acc = 0.0;
        for_each_periodized(phi, e.level, x,
                            [&](std::int64_t k, double v) { acc += e.coeffs[k] * v; });
        if (e.postprocess != Postprocess::raw) {
            acc = std::max(0.0, acc);
            if (e.postprocess == Postprocess::clip_renorm) acc /= e.renorm_mass;
        }
        out.push_back(acc);
    }
    return out;
}

/// Density in original time units: f_hat(t / tau) / tau for t in [0, tau].
/// Total mass is conserved under the change of variables.
inline std::vector<double> denormalize_grid(const DensityEstimate& e,
                                            std::span<const double> ts_original,
                                            int depth = kDefaultDepth) {
    std::vector<double> xs;
    xs.reserve(ts_original.size());
    for (double t : ts_original) xs.push_back(t / e.tau);
    std::vector<double> vals = evaluate(e, xs, depth);
    for (double& v : vals) v /= e.tau;
    return vals;
}

/// Switches the post-processing mode. clip evaluates max(0, f_hat);
/// clip_renorm additionally divides by the numerical integral of the
/// clipped curve (trapezoid, 4097 points).
inline DensityEstimate postprocess(const DensityEstimate& e, Postprocess mode,
                                   int depth = kDefaultDepth) {
    DensityEstimate out = e;
    out.postprocess = mode;
    out.renorm_mass = 1.0;
    if (mode == Postprocess::clip_renorm) {
        DensityEstimate clipped = e;
        clipped.postprocess = Postprocess::clip;
        const ScalingEvaluator phi(e.filter, depth);
        const double mass = integrate_unit(
            [&](double x) {
                double acc = 0.0;
                for_each_periodized(phi, e.level, x,
                                    [&](std::int64_t k, double v) { acc += e.coeffs[k] * v; });
                return std::max(0.0, acc);
            },
            QuadratureSpec{4097, QuadRule::trapezoid});
        if (mass < 1e-12) throw ZeroMass("clipped estimate carries no mass to renormalize");
        out.renorm_mass = mass;
    }
    return out;
}

/// Plug-in pointwise variance of the partial-data estimate (Eq-157 moment
/// form for diagonal and cross entries alike):
///
///   sigma_{kl} = (1/N) sum_i w_i^2 phi_k(Y_i) phi_l(Y_i) - c_k c_l,
///   value     = (1/N) [ sum_k sigma_kk p_k^2 + 2 sum_{k<l} sigma_kl p_k p_l ],
///
/// computed as (1/N)(p' S p - (p.c)^2) without materializing the matrix.
/// The batch form shares the per-observation basis rows across points.
inline std::vector<VarianceEstimate> pointwise_variance(const CensoredSample& s,
                                                        const DensityEstimate& e,
                                                        std::span<const double> xs,
                                                        int depth = kDefaultDepth) {
    if (e.kind != EstimatorKind::partial)
        throw KindMismatch("pointwise variance is defined for the partial-data estimator");
    detail::check_fit_inputs(s, e.level);
    const RankedSample r = rank_sample(s);
    const std::vector<double> w = ipcw_weights(r);
    const ScalingEvaluator phi(e.filter, depth);
    const std::size_t n = r.size();
    const std::size_t dim = std::size_t{1} << e.level;

    // Sparse basis rows of the contributing (uncensored) observations.
    struct Row {
        double w2;
        std::size_t begin, end;
    };
    std::vector<Row> rows;
    std::vector<std::int64_t> row_k;
    std::vector<double> row_v;
    std::vector<double> s_diag(dim, 0.0);
    std::vector<double> scratch(dim, 0.0);
    std::vector<std::int64_t> touched;
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] == 0.0) continue;
        const double w2 = w[i] * w[i] / static_cast<double>(n);
        touched.clear();
        for_each_periodized(phi, e.level, r.y_sorted[i], [&](std::int64_t k, double v) {
            if (scratch[k] == 0.0) touched.push_back(k);
            scratch[k] += v;
        });
        const std::size_t begin = row_k.size();
        for (std::int64_t k : touched) {
            row_k.push_back(k);
            row_v.push_back(scratch[k]);
            s_diag[k] += w2 * scratch[k] * scratch[k];
            scratch[k] = 0.0;
        }
        rows.push_back({w2, begin, row_k.size()});
    }

    std::vector<VarianceEstimate> out;
    out.reserve(xs.size());
    std::vector<double> p(dim, 0.0);
    for (double x : xs) {
        touched.clear();
        for_each_periodized(phi, e.level, x, [&](std::int64_t k, double v) {
            if (p[k] == 0.0) touched.push_back(k);
            p[k] += v;
        });
        double pSp = 0.0;
        for (const Row& row : rows) {
            double dot = 0.0;
            for (std::size_t j = row.begin; j < row.end; ++j) dot += row_v[j] * p[row_k[j]];
            pSp += row.w2 * dot * dot;
        }
        double pc = 0.0;
        double diag = 0.0;
        for (std::int64_t k : touched) {
            pc += p[k] * e.coeffs[k];
            diag += (s_diag[k] - e.coeffs[k] * e.coeffs[k]) * p[k] * p[k];
        }
        const double raw = (pSp - pc * pc) / static_cast<double>(n);
        VarianceEstimate v;
        v.x = x;
        v.value = std::max(0.0, raw);
        v.diagonal = diag / static_cast<double>(n);
        v.cross = raw - v.diagonal;
        out.push_back(v);
        for (std::int64_t k : touched) p[k] = 0.0;
    }
    return out;
}

inline VarianceEstimate pointwise_variance(const CensoredSample& s, const DensityEstimate& e,
                                           double x, int depth = kDefaultDepth) {
    const double xs[1] = {x};
    return pointwise_variance(s, e, std::span<const double>(xs, 1), depth)[0];
}

/// Exact integral of the raw estimate over [0,1]: partition of unity
/// collapses it to 2^{-J/2} sum_k coeffs_k.
inline double coefficient_mass(const DensityEstimate& e) {
    double sum = 0.0;
    for (double c : e.coeffs) sum += c;
    return sum / detail::level_scale(e.level);
}

}  // namespace wavedens
