#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "wavedens/baselines.hpp"
#include "wavedens/estimator.hpp"
#include "wavedens/rng.hpp"
#include "wavedens/stats.hpp"

namespace wavedens {

inline std::vector<double> uniform_grid(std::size_t points) {
    std::vector<double> g(points);
    for (std::size_t i = 0; i < points; ++i)
        g[i] = static_cast<double>(i) / static_cast<double>(points);
    return g;
}

struct SimulationConfig {
    BaselineDistribution baseline;
    std::int64_t n = 100;
    std::int64_t replications = 1000;
    double lambda = 0.8;  // exponential censoring rate
    std::string filter = "symmlet5";
    std::uint64_t seed = 0;
    std::vector<double> grid = uniform_grid(512);
    std::vector<EstimatorKind> kinds = {EstimatorKind::partial};
    std::optional<int> level;           // override select_level(n)
    bool mse_at_sample_points = false;  // score each replication at its own points
    std::vector<double> probe_points;   // retain per-replication values here
    int threads = 0;                    // 0 = hardware concurrency
    int depth = kDefaultDepth;
};

struct NormalityDiagnostic {
    double x = 0.0;
    double statistic = 0.0;  // adjusted Anderson-Darling A*^2
    bool normal_at_1pct = false;
};

struct KindReport {
    EstimatorKind kind = EstimatorKind::partial;
    MomentSummary amse;               // over per-replication MSEs
    std::vector<double> mse;          // one entry per replication
    std::vector<double> mean_curve;   // per grid point
    std::vector<double> q025_curve;
    std::vector<double> q975_curve;
    std::vector<double> best_curve;   // replication with the smallest MSE
    std::int64_t best_replication = 0;
    std::vector<std::vector<double>> probe_values;  // [probe][replication]
    std::vector<NormalityDiagnostic> normality;     // one per probe point
};

struct SimulationReport {
    std::string baseline;
    std::int64_t n = 0;
    std::int64_t replications = 0;
    double lambda = 0.0;
    std::string filter;
    int level = 0;
    std::uint64_t seed = 0;
    std::vector<double> grid;
    std::vector<double> true_pdf;
    std::vector<double> probe_points;
    double censoring_proportion = 0.0;
    std::vector<KindReport> kinds;
};

inline void validate(const SimulationConfig& cfg) {
    if (cfg.n < 2) throw ConfigError("simulation needs N >= 2");
    if (cfg.replications < 1) throw ConfigError("simulation needs B >= 1");
    if (!(cfg.lambda > 0.0)) throw ConfigError("censoring rate must be positive");
    if (cfg.grid.empty() || !std::is_sorted(cfg.grid.begin(), cfg.grid.end()))
        throw ConfigError("evaluation grid must be nonempty and sorted");
    if (cfg.kinds.empty()) throw ConfigError("at least one estimator kind is required");
    if (cfg.level && (*cfg.level < 0 || *cfg.level > kMaxLevel))
        throw ConfigError("level override must lie in [0, " + std::to_string(kMaxLevel) + "]");
}

/// Draws replication `index`: X from the baseline mixture, T ~ Exp(lambda),
/// Y = min(X, T), delta = 1(X <= T). Deterministic in (seed, index) and
/// independent across indices, so replications may run in any order.
inline CensoredSample generate_replication(const SimulationConfig& cfg, std::int64_t index) {
    Xoshiro256 rng(cfg.seed, static_cast<std::uint64_t>(index));
    CensoredSample s;
    s.y.reserve(static_cast<std::size_t>(cfg.n));
    s.delta.reserve(static_cast<std::size_t>(cfg.n));
    for (std::int64_t i = 0; i < cfg.n; ++i) {
        const double x = sample_baseline(cfg.baseline, rng);
        const double t = rng.exponential(cfg.lambda);
        s.y.push_back(std::min(x, t));
        s.delta.push_back(x <= t ? 1 : 0);
    }
    return s;
}

namespace detail {

// Sample-independent basis values on the fixed grid, stored row-compressed:
// f_hat(x_g) = sum over the row's (k, value) pairs of value * coeffs[k].
struct GridBasis {
    std::vector<std::size_t> offsets;  // grid.size() + 1
    std::vector<std::int64_t> ks;
    std::vector<double> values;

    GridBasis(const ScalingEvaluator& phi, int level, const std::vector<double>& grid) {
        offsets.reserve(grid.size() + 1);
        offsets.push_back(0);
        for (double x : grid) {
            for_each_periodized(phi, level, x, [&](std::int64_t k, double v) {
                ks.push_back(k);
                values.push_back(v);
            });
            offsets.push_back(ks.size());
        }
    }

    double apply(const std::vector<double>& coeffs, std::size_t row) const {
        double acc = 0.0;
        for (std::size_t j = offsets[row]; j < offsets[row + 1]; ++j)
            acc += values[j] * coeffs[ks[j]];
        return acc;
    }
};

}  // namespace detail

/// Runs the replication study: per replication, draw a censored sample,
/// normalize it, fit the configured estimators at J = select_level(N), and
/// score the squared error against the true mixture density (fixed grid by
/// default, the replication's own sample points behind the config flag).
/// Replications execute on a small thread pool; every result lands in a
/// preallocated slot and aggregation runs in replication order, so the
/// report is bit-identical for any thread count.
inline SimulationReport run_study(const SimulationConfig& cfg) {
    validate(cfg);
    const WaveletFilter filter = load_filter(cfg.filter);
    const int level = cfg.level ? *cfg.level : select_level(cfg.n);
    const ScalingEvaluator phi(filter, cfg.depth);
    const std::size_t n_grid = cfg.grid.size();
    const std::size_t n_kinds = cfg.kinds.size();
    const auto B = static_cast<std::size_t>(cfg.replications);

    const detail::GridBasis grid_basis(phi, level, cfg.grid);
    const detail::GridBasis probe_basis(phi, level, cfg.probe_points);

    std::vector<double> true_on_grid(n_grid);
    for (std::size_t g = 0; g < n_grid; ++g)
        true_on_grid[g] = baseline_pdf(cfg.baseline, cfg.grid[g]);

    // Per-replication storage, indexed [kind][b * n_grid + g] etc.
    std::vector<std::vector<double>> curves(n_kinds, std::vector<double>(B * n_grid));
    std::vector<std::vector<double>> mses(n_kinds, std::vector<double>(B));
    std::vector<std::vector<double>> probes(
        n_kinds, std::vector<double>(B * cfg.probe_points.size()));
    std::vector<std::int64_t> censored(B, 0);

    const auto run_one = [&](std::size_t b) {
        const CensoredSample raw = generate_replication(cfg, static_cast<std::int64_t>(b));
        for (int d : raw.delta)
            if (!d) ++censored[b];
        const CensoredSample sample = normalize(raw);
        const RankedSample ranked = rank_sample(sample);
        for (std::size_t ki = 0; ki < n_kinds; ++ki) {
            const std::vector<double> weights =
                cfg.kinds[ki] == EstimatorKind::partial
                    ? ipcw_weights(ranked)
                    : detail::complete_weights(ranked, 0);
            const std::vector<double> coeffs =
                detail::weighted_coefficients(ranked, weights, phi, level);
            double* curve = &curves[ki][b * n_grid];
            for (std::size_t g = 0; g < n_grid; ++g)
                curve[g] = grid_basis.apply(coeffs, g);
            double mse = 0.0;
            if (cfg.mse_at_sample_points) {
                for (std::size_t i = 0; i < sample.size(); ++i) {
                    double fh = 0.0;
                    for_each_periodized(phi, level, sample.y[i],
                                        [&](std::int64_t k, double v) { fh += coeffs[k] * v; });
                    const double diff = baseline_pdf(cfg.baseline, sample.y[i]) - fh;
                    mse += diff * diff;
                }
                mse /= static_cast<double>(sample.size());
            } else {
                for (std::size_t g = 0; g < n_grid; ++g) {
                    const double diff = true_on_grid[g] - curve[g];
                    mse += diff * diff;
                }
                mse /= static_cast<double>(n_grid);
            }
            mses[ki][b] = mse;
            for (std::size_t p = 0; p < cfg.probe_points.size(); ++p)
                probes[ki][b * cfg.probe_points.size() + p] = probe_basis.apply(coeffs, p);
        }
    };

    unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(B));
    if (n_threads <= 1) {
        for (std::size_t b = 0; b < B; ++b) run_one(b);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::pair<std::size_t, std::exception_ptr>> failures(
            n_threads, {B, nullptr});
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t b = t; b < B; b += n_threads) {
                    try {
                        run_one(b);
                    } catch (...) {
                        if (b < failures[t].first) failures[t] = {b, std::current_exception()};
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        std::exception_ptr first;
        std::size_t first_b = B;
        for (const auto& [b, e] : failures)
            if (e && b < first_b) {
                first_b = b;
                first = e;
            }
        if (first) std::rethrow_exception(first);  // fail fast, lowest replication wins
    }

    SimulationReport report;
    report.baseline = cfg.baseline.name;
    report.n = cfg.n;
    report.replications = cfg.replications;
    report.lambda = cfg.lambda;
    report.filter = cfg.filter;
    report.level = level;
    report.seed = cfg.seed;
    report.grid = cfg.grid;
    report.true_pdf = std::move(true_on_grid);
    report.probe_points = cfg.probe_points;

    std::int64_t total_censored = 0;
    for (std::int64_t c : censored) total_censored += c;
    report.censoring_proportion =
        static_cast<double>(total_censored) / (static_cast<double>(cfg.n) * static_cast<double>(B));

    for (std::size_t ki = 0; ki < n_kinds; ++ki) {
        KindReport kr;
        kr.kind = cfg.kinds[ki];
        kr.mse = mses[ki];
        kr.amse = summarize(kr.mse);
        std::size_t best = 0;
        for (std::size_t b = 1; b < B; ++b)
            if (kr.mse[b] < kr.mse[best]) best = b;
        kr.best_replication = static_cast<std::int64_t>(best);
        kr.mean_curve.resize(n_grid);
        kr.q025_curve.resize(n_grid);
        kr.q975_curve.resize(n_grid);
        kr.best_curve.resize(n_grid);
        std::vector<double> column(B);
        for (std::size_t g = 0; g < n_grid; ++g) {
            double sum = 0.0;
            for (std::size_t b = 0; b < B; ++b) {
                column[b] = curves[ki][b * n_grid + g];
                sum += column[b];
            }
            kr.mean_curve[g] = sum / static_cast<double>(B);
            kr.best_curve[g] = curves[ki][best * n_grid + g];
            std::sort(column.begin(), column.end());
            kr.q025_curve[g] = quantile_sorted(column, 0.025);
            kr.q975_curve[g] = quantile_sorted(column, 0.975);
        }
        for (std::size_t p = 0; p < cfg.probe_points.size(); ++p) {
            std::vector<double> vals(B);
            for (std::size_t b = 0; b < B; ++b)
                vals[b] = probes[ki][b * cfg.probe_points.size() + p];
            NormalityDiagnostic diag;
            diag.x = cfg.probe_points[p];
            if (B >= 8) {
                diag.statistic = anderson_darling_normal(vals);
                diag.normal_at_1pct = diag.statistic <= kAndersonDarling1pct;
            }
            kr.probe_values.push_back(std::move(vals));
            kr.normality.push_back(diag);
        }
        report.kinds.push_back(std::move(kr));
    }
    return report;
}

}  // namespace wavedens
