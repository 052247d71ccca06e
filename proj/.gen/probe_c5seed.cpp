#include <cstdio>
#include "wavedens/simulation.hpp"
using namespace wavedens;
int main() {
    const double paper[4] = {0.1219, 0.0821, 0.0385, 0.0214};
    const int ns[4] = {100, 200, 500, 1000};
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u}) {
        std::printf("seed=%llu:", (unsigned long long)seed);
        bool ok = true;
        double prev = 1e9;
        for (int i = 0; i < 4; ++i) {
            const int level = select_level(ns[i]);
            SimulationConfig cfg;
            cfg.baseline = make_baseline("normal");
            cfg.n = ns[i];
            cfg.replications = 200;
            cfg.lambda = 1.25;
            cfg.filter = "symmlet5";
            cfg.seed = seed;
            cfg.grid = uniform_grid(std::size_t{1} << level);
            const SimulationReport r = run_study(cfg);
            const double amse = r.kinds[0].amse.mean * (double)(1 << level) / ns[i];
            const double ratio = amse / paper[i];
            ok = ok && ratio >= 0.5 && ratio <= 2.0 && amse < prev;
            prev = amse;
            std::printf("  %.3f(x%.2f)", amse, ratio);
        }
        std::printf("  %s\n", ok ? "OK" : "OUT");
        std::fflush(stdout);
    }
    return 0;
}
