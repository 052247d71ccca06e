#include <cstdio>
#include "wavedens/simulation.hpp"
using namespace wavedens;
int main() {
    for (std::uint64_t seed : {2025u, 7u, 99u}) {
        SimulationConfig cfg;
        cfg.baseline = make_baseline("bimodal");
        cfg.n = 1000;
        cfg.replications = 1000;
        cfg.lambda = 1.25;
        cfg.filter = "symmlet5";
        cfg.seed = seed;
        cfg.grid = uniform_grid(16);
        cfg.probe_points = {0.7};
        const SimulationReport r = run_study(cfg);
        std::printf("seed=%llu AD=%.3f mean=%.4f\n", (unsigned long long)seed,
                    r.kinds[0].normality[0].statistic,
                    summarize(r.kinds[0].probe_values[0]).mean);
        std::fflush(stdout);
    }
    return 0;
}
