#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "wavedens/filters.hpp"

using namespace wavedens;

TEST_CASE("haar filter is the two-tap 1/sqrt(2) pair") {
    const WaveletFilter f = load_filter("haar");
    REQUIRE(f.support_length() == 2);
    REQUIRE(f.h[0] == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-15));
    REQUIRE(f.h[1] == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-15));
}

TEST_CASE("symmlet5 is a 10-tap filter passing both QMF invariants") {
    const WaveletFilter f = load_filter("symmlet5");
    REQUIRE(f.support_length() == 10);
    REQUIRE(filter_residual(f.h) <= 1e-12);
}

TEST_CASE("unknown names are rejected with the supported list") {
    REQUIRE_THROWS_AS(load_filter("sym99"), UnknownFilter);
    try {
        load_filter("sym99");
    } catch (const UnknownFilter& e) {
        REQUIRE(std::string(e.what()).find("symmlet5") != std::string::npos);
    }
}

TEST_CASE("catalog covers the required families") {
    const auto names = supported_filters();
    const auto has = [&](const char* n) {
        return std::find(names.begin(), names.end(), n) != names.end();
    };
    REQUIRE(has("haar"));
    for (int n = 2; n <= 10; ++n) REQUIRE(has(("daubechies" + std::to_string(n)).c_str()));
    for (int n = 4; n <= 8; ++n) REQUIRE(has(("symmlet" + std::to_string(n)).c_str()));
    for (int n = 1; n <= 3; ++n) REQUIRE(has(("coiflet" + std::to_string(n)).c_str()));
}

TEST_CASE("every catalog filter satisfies the load-time invariants") {
    for (const auto& name : supported_filters()) {
        const WaveletFilter f = load_filter(name);
        INFO(name);
        REQUIRE(f.support_length() >= 2);
        REQUIRE(f.support_length() % 2 == 0);
        double sum = 0.0;
        for (double h : f.h) sum += h;
        REQUIRE(sum == Catch::Approx(std::sqrt(2.0)).margin(1e-12));
        for (int m = 1; m < f.support_length() / 2; ++m) {
            double s = 0.0;
            for (int n = 2 * m; n < f.support_length(); ++n) s += f.h[n] * f.h[n - 2 * m];
            REQUIRE(std::fabs(s) <= 1e-12);
        }
    }
}
