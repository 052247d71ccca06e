#include <cstdio>
#include "wavedens/simulation.hpp"
using namespace wavedens;

// variants: grid vs sample-point scoring; raw vs clipped curves
int main() {
    const double paper[4] = {0.1219, 0.0821, 0.0385, 0.0214};
    const int ns[4] = {100, 200, 500, 1000};
    for (int i = 0; i < 4; ++i) {
        SimulationConfig cfg;
        cfg.baseline = make_baseline("normal");
        cfg.n = ns[i];
        cfg.replications = 200;
        cfg.lambda = 1.25;
        cfg.filter = "symmlet5";
        cfg.seed = 20250810;
        cfg.grid = uniform_grid(512);
        cfg.mse_at_sample_points = true;
        const SimulationReport rs = run_study(cfg);

        // clip variant measured on the grid, manually from the mean curves:
        // recompute per replication clip MSE here (cheap path: reuse study
        // by scoring clipped curves via its stored grid curves is not
        // exposed; instead run replications manually at small cost)
        double clip_amse = 0.0, clip_sample_amse = 0.0;
        const WaveletFilter f = load_filter("symmlet5");
        const int level = select_level(cfg.n);
        const ScalingEvaluator phi(f);
        for (int b = 0; b < 200; ++b) {
            const CensoredSample raw = generate_replication(cfg, b);
            const CensoredSample sample = normalize(raw);
            const DensityEstimate e = fit_partial(sample, f, level);
            double mse = 0.0;
            for (std::size_t g = 0; g < cfg.grid.size(); ++g) {
                double fh = 0.0;
                for_each_periodized(phi, level, cfg.grid[g], [&](std::int64_t k, double v){ fh += e.coeffs[k]*v; });
                const double diff = baseline_pdf(cfg.baseline, cfg.grid[g]) - std::max(0.0, fh);
                mse += diff * diff;
            }
            clip_amse += mse / cfg.grid.size() / 200.0;
            double mse2 = 0.0;
            for (double y : sample.y) {
                double fh = 0.0;
                for_each_periodized(phi, level, y, [&](std::int64_t k, double v){ fh += e.coeffs[k]*v; });
                const double diff = baseline_pdf(cfg.baseline, y) - std::max(0.0, fh);
                mse2 += diff * diff;
            }
            clip_sample_amse += mse2 / sample.size() / 200.0;
        }
        std::printf("N=%5d  sample_raw=%.4f  grid_clip=%.4f  sample_clip=%.4f  paper=%.4f (ratios %.2f %.2f %.2f)\n",
                    ns[i], rs.kinds[0].amse.mean, clip_amse, clip_sample_amse, paper[i],
                    rs.kinds[0].amse.mean/paper[i], clip_amse/paper[i], clip_sample_amse/paper[i]);
        std::fflush(stdout);
    }
    return 0;
}
