#pragma once

#include <cstdint>
#include <stdexcept>

namespace wavedens {

enum class QuadRule { trapezoid, simpson };

/// Composite quadrature resolution: number of abscissae on [0,1].
struct QuadratureSpec {
    std::int64_t points = 4097;
    QuadRule rule = QuadRule::trapezoid;
};

/// Composite trapezoid / Simpson over [0,1] with `spec.points` equally
/// spaced abscissae (panel width 1/(points-1); Simpson needs an even panel
/// count). `f` is invoked at every abscissa in increasing order.
template <typename F>
double integrate_unit(F&& f, const QuadratureSpec& spec) {
    const std::int64_t n = spec.points - 1;  // panels
    if (n < 1) throw std::invalid_argument("quadrature needs at least 2 points");
    const double h = 1.0 / static_cast<double>(n);
    if (spec.rule == QuadRule::trapezoid) {
        double acc = 0.5 * (f(0.0) + f(1.0));
        for (std::int64_t i = 1; i < n; ++i) acc += f(static_cast<double>(i) * h);
        return acc * h;
    }
    if (n % 2 != 0) throw std::invalid_argument("Simpson rule needs an even panel count");
    double acc = f(0.0) + f(1.0);
    for (std::int64_t i = 1; i < n; ++i)
        acc += f(static_cast<double>(i) * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

}  // namespace wavedens
