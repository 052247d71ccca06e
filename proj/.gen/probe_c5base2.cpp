#include <cstdio>
#include "wavedens/simulation.hpp"
using namespace wavedens;
int main() {
    const double paper[4] = {0.1219, 0.0821, 0.0385, 0.0214};
    const int ns[4] = {100, 200, 500, 1000};
    for (std::uint64_t seed : {1u, 3u, 5u, 7u}) {
        std::printf("seed=%llu:\n", (unsigned long long)seed);
        for (int i = 0; i < 4; ++i) {
            const int level = select_level(ns[i], LevelLog::base2);
            SimulationConfig cfg;
            cfg.baseline = make_baseline("normal");
            cfg.n = ns[i];
            cfg.replications = 200;
            cfg.lambda = 1.25;
            cfg.filter = "symmlet5";
            cfg.seed = seed;
            cfg.level = level;
            cfg.grid = uniform_grid(std::size_t{1} << level);
            const SimulationReport r = run_study(cfg);
            const double dyadic = r.kinds[0].amse.mean * (double)(1 << level) / ns[i];
            SimulationConfig cfg512 = cfg;
            cfg512.grid = uniform_grid(512);
            const SimulationReport r512 = run_study(cfg512);
            std::printf("  N=%5d J=%d dyadic=%.4f(x%.2f) grid512=%.4f(x%.2f)\n", ns[i], level,
                        dyadic, dyadic / paper[i], r512.kinds[0].amse.mean,
                        r512.kinds[0].amse.mean / paper[i]);
            std::fflush(stdout);
        }
    }
    return 0;
}
