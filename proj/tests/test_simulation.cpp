#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "wavedens/simulation.hpp"

using namespace wavedens;

namespace {

SimulationConfig small_config() {
    SimulationConfig cfg;
    cfg.baseline = make_baseline("normal");
    cfg.n = 120;
    cfg.replications = 24;
    cfg.lambda = 0.8;
    cfg.filter = "symmlet5";
    cfg.seed = 2024;
    cfg.grid = uniform_grid(128);
    return cfg;
}

}  // namespace

TEST_CASE("replication generation is deterministic and order-independent") {
    const SimulationConfig cfg = small_config();
    const CensoredSample a = generate_replication(cfg, 7);
    const CensoredSample b = generate_replication(cfg, 7);
    REQUIRE(a.y == b.y);
    REQUIRE(a.delta == b.delta);
    const CensoredSample c = generate_replication(cfg, 8);
    REQUIRE(a.y != c.y);
}

TEST_CASE("extreme censoring rates drive the indicator to its limits") {
    SimulationConfig cfg = small_config();
    cfg.n = 4000;
    cfg.lambda = 1e6;  // censoring times collapse toward 0
    const CensoredSample heavy = generate_replication(cfg, 0);
    std::int64_t censored = 0;
    for (int d : heavy.delta) censored += 1 - d;
    REQUIRE(static_cast<double>(censored) / static_cast<double>(cfg.n) > 0.99);

    cfg.lambda = 1e-9;  // censoring times are astronomically large
    const CensoredSample light = generate_replication(cfg, 0);
    std::int64_t events = 0;
    for (int d : light.delta) events += d;
    REQUIRE(events == cfg.n);
}

TEST_CASE("the study's censoring scheme censors a bit under half the sample") {
    // The reported ~45% censoring pins the mean-0.8 reading of Exp(0.8)
    // (as a rate, 1/0.8): with rate 0.8 the exact proportion would be
    // 1 - E[exp(-0.8 X)] ~ 0.325, with rate 1.25 it is ~0.455.
    SimulationConfig cfg = small_config();
    cfg.n = 10000;
    cfg.lambda = 1.25;
    const CensoredSample s = generate_replication(cfg, 3);
    std::int64_t censored = 0;
    for (int d : s.delta) censored += 1 - d;
    const double proportion = static_cast<double>(censored) / static_cast<double>(cfg.n);
    REQUIRE(proportion >= 0.35);
    REQUIRE(proportion <= 0.55);
}

TEST_CASE("per-replication MSE of the zero estimator is the mean squared density") {
    // With B = 1 and the all-censored limit the fitted coefficients vanish,
    // so the study's MSE must equal (1/|grid|) sum f(x_g)^2 analytically.
    SimulationConfig cfg = small_config();
    cfg.lambda = 1e9;  // every observation censored -> zero partial fit
    cfg.replications = 1;
    cfg.n = 50;
    const SimulationReport r = run_study(cfg);
    double expect = 0.0;
    for (double x : cfg.grid) {
        const double f = baseline_pdf(cfg.baseline, x);
        expect += f * f;
    }
    expect /= static_cast<double>(cfg.grid.size());
    REQUIRE(r.kinds[0].amse.mean == Catch::Approx(expect).margin(1e-12));
}

TEST_CASE("identical configurations give bit-identical reports") {
    SimulationConfig cfg = small_config();
    cfg.kinds = {EstimatorKind::partial, EstimatorKind::complete};
    cfg.probe_points = {0.5};
    const SimulationReport a = run_study(cfg);
    cfg.threads = 1;
    const SimulationReport b = run_study(cfg);  // same seed, one worker
    REQUIRE(a.censoring_proportion == b.censoring_proportion);
    for (std::size_t ki = 0; ki < a.kinds.size(); ++ki) {
        REQUIRE(a.kinds[ki].amse.mean == b.kinds[ki].amse.mean);
        REQUIRE(a.kinds[ki].amse.stddev == b.kinds[ki].amse.stddev);
        REQUIRE(a.kinds[ki].mse == b.kinds[ki].mse);
        REQUIRE(a.kinds[ki].mean_curve == b.kinds[ki].mean_curve);
        REQUIRE(a.kinds[ki].q025_curve == b.kinds[ki].q025_curve);
        REQUIRE(a.kinds[ki].q975_curve == b.kinds[ki].q975_curve);
        REQUIRE(a.kinds[ki].best_curve == b.kinds[ki].best_curve);
        REQUIRE(a.kinds[ki].probe_values[0] == b.kinds[ki].probe_values[0]);
    }
}

TEST_CASE("report aggregates are internally consistent") {
    SimulationConfig cfg = small_config();
    cfg.probe_points = {0.3, 0.7};
    const SimulationReport r = run_study(cfg);
    const KindReport& k = r.kinds[0];
    REQUIRE(k.amse.min <= k.amse.mean);
    REQUIRE(k.amse.mean <= k.amse.max);
    REQUIRE(k.mse[static_cast<std::size_t>(k.best_replication)] == k.amse.min);
    for (std::size_t g = 0; g < r.grid.size(); ++g)
        REQUIRE(k.q025_curve[g] <= k.q975_curve[g]);
    REQUIRE(r.censoring_proportion > 0.2);
    REQUIRE(r.censoring_proportion < 0.7);
    REQUIRE(r.level == select_level(cfg.n));
    REQUIRE(k.probe_values.size() == 2);
    REQUIRE(k.probe_values[0].size() == static_cast<std::size_t>(cfg.replications));
    REQUIRE(k.normality.size() == 2);
}

TEST_CASE("sample-point scoring differs from grid scoring but stays comparable") {
    SimulationConfig cfg = small_config();
    cfg.replications = 8;
    const SimulationReport grid_scored = run_study(cfg);
    cfg.mse_at_sample_points = true;
    const SimulationReport sample_scored = run_study(cfg);
    REQUIRE(grid_scored.kinds[0].amse.mean != sample_scored.kinds[0].amse.mean);
    const double ratio = sample_scored.kinds[0].amse.mean / grid_scored.kinds[0].amse.mean;
    REQUIRE(ratio > 0.1);
    REQUIRE(ratio < 10.0);
}

TEST_CASE("invalid configurations are rejected") {
    SimulationConfig cfg = small_config();
    cfg.n = 1;
    REQUIRE_THROWS_AS(run_study(cfg), ConfigError);
    cfg = small_config();
    cfg.replications = 0;
    REQUIRE_THROWS_AS(run_study(cfg), ConfigError);
    cfg = small_config();
    cfg.lambda = 0.0;
    REQUIRE_THROWS_AS(run_study(cfg), ConfigError);
    cfg = small_config();
    cfg.grid = {0.5, 0.2};
    REQUIRE_THROWS_AS(run_study(cfg), ConfigError);
    cfg = small_config();
    cfg.filter = "sym99";
    REQUIRE_THROWS_AS(run_study(cfg), UnknownFilter);
}

TEST_CASE("plug-in variance is calibrated against the replication spread") {
    // Desk-scale version of the simulation-oracle check: the empirical
    // variance of f_hat(0.5) across replications should sit within a factor
    // of two of the Eq-157 plug-in evaluated on a single replication.
    SimulationConfig cfg;
    cfg.baseline = make_baseline("normal");
    cfg.n = 400;
    cfg.replications = 1000;
    cfg.lambda = 0.8;
    cfg.filter = "symmlet5";
    cfg.seed = 99;
    cfg.grid = uniform_grid(8);  // keep the per-replication grid work tiny
    cfg.probe_points = {0.5};
    const SimulationReport r = run_study(cfg);
    const MomentSummary probe = summarize(r.kinds[0].probe_values[0]);
    const double empirical = probe.stddev * probe.stddev;

    const CensoredSample sample = normalize(generate_replication(cfg, 0));
    const DensityEstimate e = fit_partial(sample, load_filter(cfg.filter), r.level);
    const double plugin = pointwise_variance(sample, e, 0.5).value;
    const double ratio = plugin / empirical;
    INFO("plugin=" << plugin << " empirical=" << empirical);
    REQUIRE(ratio >= 0.5);
    REQUIRE(ratio <= 2.0);
}
