#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wavedens/estimator.hpp"
#include "wavedens/io.hpp"
#include "wavedens/oracle.hpp"
#include "wavedens/simulation.hpp"

namespace wavedens {

enum class RunMode { estimate, simulate };

/// Everything the CLI front end can ask for. Field semantics follow the
/// subcommand: estimate-mode fields are ignored in simulate mode and vice
/// versa.
struct RunConfig {
    RunMode mode = RunMode::estimate;
    std::string output_dir = ".";
    std::string filter = "symmlet5";
    int grid_points = 512;

    // estimate mode
    std::string input_path;
    std::optional<int> level;  // empty = select_level(N)
    EstimatorKind estimator = EstimatorKind::partial;
    Postprocess post = Postprocess::clip;
    LevelLog log_convention = LevelLog::natural;

    // simulate mode
    std::string baseline = "normal";
    std::int64_t n = 100;
    std::int64_t replications = 1000;
    double lambda = 0.8;
    std::uint64_t seed = 0;
    std::vector<EstimatorKind> kinds = {EstimatorKind::partial};
    bool mse_at_sample_points = false;
    std::vector<double> probe_points;
    int threads = 0;
};

/// Exit codes: 0 success, 2 configuration error, 3 data error, 4 numerical
/// error.
inline int exit_code_for(const Error& e) {
    const std::string& k = e.kind();
    if (k == "UnknownFilter" || k == "ConfigError") return 2;
    if (k == "InvalidSampleSize" || k == "AllZeroSample" || k == "IoError" ||
        k == "ParseError" || k == "NegativeTime" || k == "BadStatus")
        return 3;
    return 4;  // DegenerateWeight, ZeroMass, NonConvergent, KindMismatch
}

inline const char* postprocess_name(Postprocess p) {
    switch (p) {
        case Postprocess::raw: return "raw";
        case Postprocess::clip: return "clip";
        default: return "clip_renorm";
    }
}

namespace detail {

inline void run_estimate(const RunConfig& cfg) {
    if (cfg.grid_points < 2) throw ConfigError("grid_points must be at least 2");
    if (cfg.level && (*cfg.level < 0 || *cfg.level > kMaxLevel))
        throw ConfigError("level must lie in [0, " + std::to_string(kMaxLevel) + "]");
    const CensoredSample raw = ingest_csv(cfg.input_path);
    std::size_t censored = 0;
    for (int d : raw.delta)
        if (!d) ++censored;
    const CensoredSample sample = normalize(raw);
    const WaveletFilter filter = load_filter(cfg.filter);
    const int level = cfg.level ? *cfg.level
                                : select_level(static_cast<std::int64_t>(sample.size()),
                                               cfg.log_convention);
    const DensityEstimate fitted = cfg.estimator == EstimatorKind::partial
                                       ? fit_partial(sample, filter, level)
                                       : fit_complete(sample, filter, level);
    const double mass = coefficient_mass(fitted);
    const DensityEstimate est = postprocess(fitted, cfg.post);

    std::vector<double> xs(static_cast<std::size_t>(cfg.grid_points));
    for (std::size_t i = 0; i < xs.size(); ++i)
        xs[i] = static_cast<double>(i) / static_cast<double>(xs.size() - 1);
    const std::vector<double> fhat = evaluate(est, xs);

    std::vector<double> variance(xs.size(), std::numeric_limits<double>::quiet_NaN());
    if (est.kind == EstimatorKind::partial) {
        const std::vector<VarianceEstimate> vs = pointwise_variance(sample, fitted, xs);
        for (std::size_t i = 0; i < xs.size(); ++i) variance[i] = vs[i].value;
    }

    std::filesystem::create_directories(cfg.output_dir);
    std::vector<DensityRow> rows;
    rows.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        rows.push_back({xs[i] * est.tau, xs[i], fhat[i], fhat[i] / est.tau, variance[i]});
    write_density_csv(rows, cfg.output_dir + "/density.csv");

    nlohmann::json meta;
    meta["tau"] = est.tau;
    meta["level"] = level;
    meta["filter"] = cfg.filter;
    meta["estimator"] = kind_name(est.kind);
    meta["postprocess"] = postprocess_name(cfg.post);
    meta["n"] = sample.size();
    meta["censoring_proportion"] =
        static_cast<double>(censored) / static_cast<double>(sample.size());
    meta["mass"] = mass;
    std::ofstream out(cfg.output_dir + "/meta.json");
    if (!out) throw IoError("cannot write '" + cfg.output_dir + "/meta.json'");
    out << meta.dump(2) << '\n';
}

inline void run_simulate(const RunConfig& cfg) {
    if (cfg.grid_points < 2) throw ConfigError("grid_points must be at least 2");
    SimulationConfig sim;
    sim.baseline = make_baseline(cfg.baseline);
    sim.n = cfg.n;
    sim.replications = cfg.replications;
    sim.lambda = cfg.lambda;
    sim.filter = cfg.filter;
    sim.seed = cfg.seed;
    sim.grid = uniform_grid(static_cast<std::size_t>(cfg.grid_points));
    sim.kinds = cfg.kinds;
    sim.mse_at_sample_points = cfg.mse_at_sample_points;
    sim.probe_points = cfg.probe_points;
    sim.threads = cfg.threads;
    load_filter(cfg.filter);  // surface bad names as a config error up front
    const SimulationReport report = run_study(sim);
    write_simulation_artifacts(report, cfg.output_dir);
}

}  // namespace detail

/// Executes one configuration; returns the process exit code and, on
/// failure, prints a machine-readable error JSON to stderr.
inline int run(const RunConfig& cfg) {
    try {
        if (cfg.mode == RunMode::estimate)
            detail::run_estimate(cfg);
        else
            detail::run_simulate(cfg);
        return 0;
    } catch (const Error& e) {
        nlohmann::json j;
        j["error"]["kind"] = e.kind();
        j["error"]["message"] = e.what();
        std::cerr << j.dump() << std::endl;
        return exit_code_for(e);
    } catch (const std::exception& e) {
        nlohmann::json j;
        j["error"]["kind"] = "Internal";
        j["error"]["message"] = e.what();
        std::cerr << j.dump() << std::endl;
        return 4;
    }
}

}  // namespace wavedens
