#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "wavedens/baselines.hpp"
#include "wavedens/quadrature.hpp"

using namespace wavedens;

TEST_CASE("baseline catalog carries the exact mixture parameters") {
    const BaselineDistribution delta = make_baseline("delta");
    REQUIRE(delta.components.size() == 1);
    REQUIRE(delta.components[0].mean == 0.5);
    REQUIRE(delta.components[0].stddev == 0.02);

    const BaselineDistribution bimodal = make_baseline("bimodal");
    REQUIRE(bimodal.components.size() == 2);
    REQUIRE(bimodal.components[0].weight == 0.5);
    REQUIRE(bimodal.components[0].mean == 0.4);
    REQUIRE(bimodal.components[0].stddev == 0.12);
    REQUIRE(bimodal.components[1].mean == 0.7);
    REQUIRE(bimodal.components[1].stddev == 0.08);

    const BaselineDistribution multi = make_baseline("multimodal");
    REQUIRE(multi.components.size() == 3);
    for (const auto& c : multi.components) REQUIRE(c.weight == Catch::Approx(1.0 / 3.0));

    const BaselineDistribution strata = make_baseline("strata");
    REQUIRE(strata.components[0].mean == 0.2);
    REQUIRE(strata.components[0].stddev == 0.06);

    REQUIRE_THROWS_AS(make_baseline("cauchy"), ConfigError);
}

TEST_CASE("mixture weights are positive and sum to one") {
    for (const auto& name : baseline_names()) {
        const BaselineDistribution b = make_baseline(name);
        double sum = 0.0;
        for (const auto& c : b.components) {
            REQUIRE(c.weight > 0.0);
            REQUIRE(c.stddev > 0.0);
            sum += c.weight;
        }
        REQUIRE(sum == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("normal baseline density at its mode") {
    const BaselineDistribution b = make_baseline("normal");
    REQUIRE(baseline_pdf(b, 0.5) == Catch::Approx(2.6596152026762178).margin(1e-12));
}

TEST_CASE("bimodal density is the weighted sum of its components") {
    const BaselineDistribution b = make_baseline("bimodal");
    const double expect = 0.5 * normal_pdf(0.4, 0.4, 0.12) + 0.5 * normal_pdf(0.4, 0.7, 0.08);
    REQUIRE(baseline_pdf(b, 0.4) == Catch::Approx(expect).margin(1e-15));
}

TEST_CASE("every baseline integrates to one over the real line") {
    // Quadrature over [-1, 2] covers all mixture mass to far below 1e-8.
    for (const auto& name : baseline_names()) {
        const BaselineDistribution b = make_baseline(name);
        const double mass = 3.0 * integrate_unit(
                                      [&](double u) { return baseline_pdf(b, -1.0 + 3.0 * u); },
                                      QuadratureSpec{(1 << 15) + 1, QuadRule::simpson});
        INFO(name);
        REQUIRE(mass == Catch::Approx(1.0).margin(1e-8));
    }
}

TEST_CASE("sampling tracks the mixture CDF") {
    const BaselineDistribution b = make_baseline("strata");
    Xoshiro256 rng(101, 5);
    const int n = 200000;
    int below_half = 0;
    for (int i = 0; i < n; ++i)
        if (sample_baseline(b, rng) <= 0.5) ++below_half;
    const double expect = baseline_cdf(b, 0.5);
    const double se = std::sqrt(expect * (1 - expect) / n);
    REQUIRE(std::fabs(below_half / static_cast<double>(n) - expect) <= 5 * se);
}
