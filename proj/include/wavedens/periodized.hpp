#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "wavedens/scaling.hpp"

namespace wavedens {

/// Index (J, k) of a periodized basis function phi^per_{J,k} on [0,1],
/// with 0 <= k <= 2^J - 1.
struct PeriodizedIndex {
    int level = 0;  // J
    std::int64_t k = 0;
};

namespace detail {

inline double reduce_mod1(double x) {
    double u = x - std::floor(x);  // floor-based modulus, handles negative x
    if (u >= 1.0) u = 0.0;         // guards frac rounding up to 1.0
    return u;
}

inline double level_scale(int level) {  // 2^{J/2}
    const double base = std::ldexp(1.0, level / 2);
    return (level % 2) ? base * std::sqrt(2.0) : base;
}

}  // namespace detail

/// The 2^{J/2} normalization carried by every level-J basis function.
inline double periodized_level_scale(int level) { return detail::level_scale(level); }

/// phi^per_{J,k}(x) = 2^{J/2} sum_l phi(2^J (x - l) - k). The lattice sum
/// runs over exactly the translates whose support overlaps; x is reduced
/// mod 1 first, so any real argument is valid.
inline double eval_periodized(const ScalingEvaluator& phi, PeriodizedIndex idx, double x) {
    const int L = phi.filter().support_length();
    const double u = detail::reduce_mod1(x);
    const double scale = std::ldexp(1.0, idx.level);  // 2^J
    // Support condition 0 <= 2^J (u - l) - k <= L-1 bounds l to:
    const double lo = u - (static_cast<double>(idx.k) + (L - 1)) / scale;
    const double hi = u - static_cast<double>(idx.k) / scale;
    const auto l_min = static_cast<std::int64_t>(std::ceil(lo));
    const auto l_max = static_cast<std::int64_t>(std::floor(hi));
    double acc = 0.0;
    for (std::int64_t l = l_min; l <= l_max; ++l)
        acc += phi(scale * (u - static_cast<double>(l)) - static_cast<double>(idx.k));
    return detail::level_scale(idx.level) * acc;
}

/// Convenience overload constructing a transient evaluator.
inline double eval_periodized(const WaveletFilter& filter, PeriodizedIndex idx, double x,
                              int depth = kDefaultDepth) {
    return eval_periodized(ScalingEvaluator(filter, depth), idx, x);
}

/// Visits the nonzero basis functions at one point: for x in [0,1) the
/// periodized functions with phi-support containing x are exactly the
/// wrapped indices k = (floor(2^J x) - o) mod 2^J for offsets o = 0..L-2,
/// with inner argument 2^J x - floor(2^J x) + o. Calls fn(k, value) for
/// each, where value already carries the 2^{J/2} scale. An index k is
/// visited once per overlapping translate, so accumulate contributions.
template <typename Fn>
inline void for_each_periodized(const ScalingEvaluator& phi, int level, double x, Fn&& fn) {
    const int L = phi.filter().support_length();
    const std::int64_t period = std::int64_t{1} << level;
    const double u = detail::reduce_mod1(x);
    const double base = std::ldexp(u, level);
    const double scale = detail::level_scale(level);
    const auto kf = static_cast<std::int64_t>(std::floor(base));
    const double frac = base - static_cast<double>(kf);
    for (int o = 0; o <= L - 2; ++o) {
        const double value = phi(frac + o);
        if (value == 0.0) continue;
        std::int64_t k = (kf - o) % period;
        if (k < 0) k += period;
        fn(k, scale * value);
    }
}

}  // namespace wavedens
