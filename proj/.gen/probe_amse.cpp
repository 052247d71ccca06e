#include <cstdio>
#include <chrono>
#include "wavedens/simulation.hpp"
using namespace wavedens;

int main(int argc, char** argv) {
    const double rate = argc > 1 ? atof(argv[1]) : 1.25;
    const double paper[4] = {0.1219, 0.0821, 0.0385, 0.0214};
    const int ns[4] = {100, 200, 500, 1000};
    for (int i = 0; i < 4; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        SimulationConfig cfg;
        cfg.baseline = make_baseline("normal");
        cfg.n = ns[i];
        cfg.replications = 200;
        cfg.lambda = rate;
        cfg.filter = "symmlet5";
        cfg.seed = 20250810;
        cfg.grid = uniform_grid(512);
        const SimulationReport r = run_study(cfg);
        auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("N=%5d J=%d censor=%.3f meanAMSE=%.4f (paper %.4f, ratio %.2f) sd=%.4f min=%.4f max=%.4f  [%.1fs]\n",
                    ns[i], r.level, r.censoring_proportion, r.kinds[0].amse.mean, paper[i],
                    r.kinds[0].amse.mean / paper[i], r.kinds[0].amse.stddev,
                    r.kinds[0].amse.min, r.kinds[0].amse.max, dt);
        std::fflush(stdout);
    }
    return 0;
}
