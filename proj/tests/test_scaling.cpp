#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "wavedens/rng.hpp"
#include "wavedens/scaling.hpp"

using namespace wavedens;

TEST_CASE("haar scaling function is the unit box") {
    const WaveletFilter f = load_filter("haar");
    for (int depth : {1, 5, 40}) {
        REQUIRE(eval_scaling(f, 0.5, depth) == Catch::Approx(1.0).margin(1e-14));
        REQUIRE(eval_scaling(f, 0.0, depth) == Catch::Approx(1.0).margin(1e-14));
    }
    REQUIRE(eval_scaling(f, 1.0) == 0.0);
    REQUIRE(eval_scaling(f, -0.25) == 0.0);
}

TEST_CASE("daubechies2 at integer abscissae matches the eigenvector oracle") {
    const WaveletFilter f = load_filter("daubechies2");
    // (1 + sqrt 3)/2 and (1 - sqrt 3)/2: the eigenvalue-1 eigenvector of the
    // refinement matrix, normalized to sum 1.
    const double phi1 = (1.0 + std::sqrt(3.0)) / 2.0;
    const double phi2 = (1.0 - std::sqrt(3.0)) / 2.0;
    const auto ints = scaling_integer_values(f);
    REQUIRE(ints[0] == Catch::Approx(0.0).margin(1e-13));
    REQUIRE(ints[1] == Catch::Approx(phi1).margin(1e-13));
    REQUIRE(ints[2] == Catch::Approx(phi2).margin(1e-13));
    REQUIRE(ints[3] == Catch::Approx(0.0).margin(1e-13));
    REQUIRE(eval_scaling(f, 1.0) == Catch::Approx(phi1).margin(1e-11));
    REQUIRE(eval_scaling(f, 2.0) == Catch::Approx(phi2).margin(1e-11));
}

TEST_CASE("out-of-support arguments evaluate to exactly zero") {
    for (const auto& name : supported_filters()) {
        const WaveletFilter f = load_filter(name);
        REQUIRE(eval_scaling(f, -0.25) == 0.0);
        REQUIRE(eval_scaling(f, static_cast<double>(f.support_length() - 1)) == 0.0);
        REQUIRE(eval_scaling(f, static_cast<double>(f.support_length())) == 0.0);
    }
}

TEST_CASE("integer values sum to one") {
    for (const auto& name : supported_filters()) {
        const auto vals = scaling_integer_values(load_filter(name));
        double sum = 0.0;
        for (double v : vals) sum += v;
        INFO(name);
        REQUIRE(sum == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("refinement identity holds pointwise") {
    Xoshiro256 rng(7, 0);
    for (const char* name : {"daubechies2", "symmlet5", "coiflet2"}) {
        const WaveletFilter f = load_filter(name);
        const ScalingEvaluator phi(f);
        const int L = f.support_length();
        for (int trial = 0; trial < 1000; ++trial) {
            const double x = rng.uniform() * (L - 1);
            double rhs = 0.0;
            for (int r = 0; r < L; ++r) rhs += f.h[r] * phi(2.0 * x - r);
            rhs *= std::sqrt(2.0);
            INFO(name << " x=" << x);
            REQUIRE(phi(x) == Catch::Approx(rhs).margin(1e-8));
        }
    }
}

TEST_CASE("Daubechies-Lagarias agrees with the cascade oracle at dyadics") {
    for (const char* name : {"haar", "daubechies3", "symmlet5"}) {
        const WaveletFilter f = load_filter(name);
        const ScalingEvaluator phi(f);
        const CascadeTable table(f, 10);
        const int L = f.support_length();
        double worst = 0.0;
        for (std::int64_t k = 0; k <= static_cast<std::int64_t>(L - 1) << 10; ++k) {
            const double x = std::ldexp(static_cast<double>(k), -10);
            worst = std::max(worst, std::fabs(phi(x) - table.at_dyadic(x)));
        }
        INFO(name);
        REQUIRE(worst <= 1e-8);
    }
}

TEST_CASE("deeper recursions refine the value, not change it") {
    const WaveletFilter f = load_filter("symmlet5");
    for (double x : {0.3, 1.7, 4.21, 7.9}) {
        const double v40 = eval_scaling(f, x, 40);
        const double v64 = eval_scaling(f, x, 64);
        REQUIRE(v40 == Catch::Approx(v64).margin(1e-10));
    }
}
