#include <cstdio>
#include <algorithm>
#include "wavedens/simulation.hpp"
using namespace wavedens;

int main() {
    const double paper[4] = {0.1219, 0.0821, 0.0385, 0.0214};
    const int ns[4] = {100, 200, 500, 1000};
    for (std::uint64_t seed : {1u, 3u, 5u}) {
        std::printf("seed=%llu:\n", (unsigned long long)seed);
        for (int i = 0; i < 4; ++i) {
            const int level = select_level(ns[i]);
            const WaveletFilter f = load_filter("symmlet5");
            const ScalingEvaluator phi(f);
            SimulationConfig cfg;
            cfg.baseline = make_baseline("normal");
            cfg.n = ns[i];
            cfg.replications = 200;
            cfg.lambda = 1.25;
            cfg.seed = seed;
            const std::int64_t G = std::int64_t{1} << level;
            double raw_amse = 0.0, clip_amse = 0.0;
            for (int b = 0; b < 200; ++b) {
                const CensoredSample s = normalize(generate_replication(cfg, b));
                const DensityEstimate e = fit_partial(s, f, level);
                double mr = 0.0, mc = 0.0;
                for (std::int64_t g = 0; g < G; ++g) {
                    const double x = (double)g / (double)G;
                    double fh = 0.0;
                    for_each_periodized(phi, level, x, [&](std::int64_t k, double v){ fh += e.coeffs[k]*v; });
                    const double t = baseline_pdf(cfg.baseline, x);
                    mr += (t - fh) * (t - fh);
                    const double fc = std::max(0.0, fh);
                    mc += (t - fc) * (t - fc);
                }
                raw_amse += mr / ns[i] / 200.0;
                clip_amse += mc / ns[i] / 200.0;
            }
            std::printf("  N=%5d raw=%.4f(x%.2f) clip=%.4f(x%.2f)\n", ns[i],
                        raw_amse, raw_amse / paper[i], clip_amse, clip_amse / paper[i]);
            std::fflush(stdout);
        }
    }
    return 0;
}
