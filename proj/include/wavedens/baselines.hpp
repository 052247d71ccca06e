#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "wavedens/errors.hpp"
#include "wavedens/rng.hpp"

namespace wavedens {

inline double normal_pdf(double x, double mean, double stddev) {
    const double z = (x - mean) / stddev;
    return std::exp(-0.5 * z * z) / (stddev * 2.5066282746310005024);
}

inline double normal_cdf(double x, double mean = 0.0, double stddev = 1.0) {
    return 0.5 * std::erfc(-(x - mean) / (stddev * 1.4142135623730950488));
}

/// Normal mixture component (weight, mean, stddev).
struct MixtureComponent {
    double weight;
    double mean;
    double stddev;
};

/// One of the five exemplary lifetime densities used in the replication
/// study; all are normal mixtures supported essentially inside [0,1].
struct BaselineDistribution {
    std::string name;
    std::vector<MixtureComponent> components;
};

inline BaselineDistribution make_baseline(const std::string& name) {
    if (name == "delta") return {name, {{1.0, 0.5, 0.02}}};
    if (name == "normal") return {name, {{1.0, 0.5, 0.15}}};
    if (name == "bimodal") return {name, {{0.5, 0.4, 0.12}, {0.5, 0.7, 0.08}}};
    if (name == "strata") return {name, {{0.5, 0.2, 0.06}, {0.5, 0.7, 0.08}}};
    if (name == "multimodal")
        return {name, {{1.0 / 3.0, 0.2, 0.06}, {1.0 / 3.0, 0.5, 0.05}, {1.0 / 3.0, 0.7, 0.05}}};
    throw ConfigError("unknown baseline '" + name +
                      "'; expected delta|normal|bimodal|strata|multimodal");
}

inline std::vector<std::string> baseline_names() {
    return {"delta", "normal", "bimodal", "strata", "multimodal"};
}

inline double baseline_pdf(const BaselineDistribution& b, double x) {
    double acc = 0.0;
    for (const auto& c : b.components) acc += c.weight * normal_pdf(x, c.mean, c.stddev);
    return acc;
}

inline double baseline_cdf(const BaselineDistribution& b, double x) {
    double acc = 0.0;
    for (const auto& c : b.components) acc += c.weight * normal_cdf(x, c.mean, c.stddev);
    return acc;
}

/// Draws one lifetime: mixture component chosen by weight, then a normal
/// draw, rejecting the sliver of negative values so times stay lifetimes
/// (the shift in law is below the 1e-3 tail-mass tolerance of the study).
inline double sample_baseline(const BaselineDistribution& b, Xoshiro256& rng) {
    for (;;) {
        const double u = rng.uniform();
        double cum = 0.0;
        const MixtureComponent* pick = &b.components.back();
        for (const auto& c : b.components) {
            cum += c.weight;
            if (u <= cum) {
                pick = &c;
                break;
            }
        }
        const double x = pick->mean + pick->stddev * rng.normal();
        if (x >= 0.0) return x;
    }
}

}  // namespace wavedens
